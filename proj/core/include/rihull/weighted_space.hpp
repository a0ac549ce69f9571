#pragma once

#include <functional>
#include <vector>

#include "rihull/step_function.hpp"

namespace rihull {

// Interval endowed with the measure  mu(E) = integral over E of the density
// against Lebesgue measure. Densities are finite-valued nonnegative step
// functions; the space is sigma-finite and nonatomic by construction.
class WeightedSpace {
 public:
  explicit WeightedSpace(StepFunction density);
  static WeightedSpace lebesgue(Interval domain);

  const StepFunction& density() const { return density_; }
  const Interval& domain() const { return density_.domain(); }
  ExtScalar total() const { return total_; }  // mu(R)

  ExtScalar measure(const Interval& iv) const;               // mu(iv ∩ domain)
  ExtScalar measure(const std::vector<Interval>& set) const;  // set need not be normalized
  // Space with density masked to the given set: the restriction of mu.
  WeightedSpace restricted(const std::vector<Interval>& set) const;

 private:
  StepFunction density_;
  ExtScalar total_;
};

// Exact integral of f against the space's measure, with 0 * inf = 0 on pieces
// of infinite length or infinite value. Domains must match exactly.
ExtScalar integrate(const StepFunction& f, const WeightedSpace& sp);

// Maximal intervals where the value satisfies pred (structural; ignores the
// density). Adjacent qualifying pieces are fused.
std::vector<Interval> level_set(const StepFunction& f,
                                const std::function<bool(const ExtScalar&)>& pred);

}  // namespace rihull
