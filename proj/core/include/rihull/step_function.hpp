#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "rihull/ext_scalar.hpp"
#include "rihull/interval.hpp"

namespace rihull {

// Nonnegative step function given by interior breakpoints of its domain and
// one value per subinterval. Always canonical: adjacent equal values are
// merged, so structural equality is a.e. equality. Endpoint values are never
// stored; everything is open-interval, almost-everywhere semantics.
class StepFunction {
 public:
  StepFunction(Interval domain, std::vector<Rat> breaks, std::vector<ExtScalar> values);
  static StepFunction constant(Interval domain, ExtScalar value);

  const Interval& domain() const { return domain_; }
  const std::vector<Rat>& breaks() const { return breaks_; }
  const std::vector<ExtScalar>& values() const { return values_; }
  std::size_t piece_count() const { return values_.size(); }
  Interval piece(std::size_t i) const;
  const ExtScalar& value(std::size_t i) const { return values_[i]; }

  // Value at an interior point; at a breakpoint returns the right piece
  // (irrelevant a.e., fixed for determinism).
  const ExtScalar& value_at(const Rat& x) const;

  bool all_finite() const;
  bool is_zero() const { return values_.size() == 1 && values_[0].is_zero(); }
  bool is_nonincreasing() const;
  bool is_nondecreasing() const;
  ExtScalar max_value() const;

  StepFunction map_values(const std::function<ExtScalar(const ExtScalar&)>& fn) const;
  StepFunction scale_values(const Rat& c) const;  // c >= 0
  StepFunction pow_int(long k) const;
  // Restriction to a subinterval of the domain (new domain = sub).
  StepFunction restrict_to(const Interval& sub) const;
  // f * indicator(set); domain unchanged. set intervals are clipped to domain.
  StepFunction mask(const std::vector<Interval>& set) const;
  // Reflection t -> M - t of a function on (0, M).
  StepFunction reflect(const Rat& m) const;

  static std::pair<StepFunction, StepFunction> refine(const StepFunction& f,
                                                      const StepFunction& g);
  static StepFunction combine(const StepFunction& f, const StepFunction& g,
                              const std::function<ExtScalar(const ExtScalar&, const ExtScalar&)>& op);
  static StepFunction multiply(const StepFunction& f, const StepFunction& g);
  static StepFunction add(const StepFunction& f, const StepFunction& g);
  static StepFunction pointwise_min(const StepFunction& f, const StepFunction& g);
  static StepFunction pointwise_max(const StepFunction& f, const StepFunction& g);
  // f <= g almost everywhere.
  static bool le_ae(const StepFunction& f, const StepFunction& g);

  friend bool operator==(const StepFunction& a, const StepFunction& b) {
    return a.domain_ == b.domain_ && a.breaks_ == b.breaks_ && a.values_ == b.values_;
  }

 private:
  Interval domain_;
  std::vector<Rat> breaks_;
  std::vector<ExtScalar> values_;
  void canonicalize();
};

// Pieces of the common refinement of f and g (same domain required).
struct RefinedPiece {
  Interval iv;
  ExtScalar f;
  ExtScalar g;
};
std::vector<RefinedPiece> refined_pieces(const StepFunction& f, const StepFunction& g);

}  // namespace rihull
