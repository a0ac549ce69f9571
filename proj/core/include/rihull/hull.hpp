#pragma once

#include <string>
#include <vector>

#include "rihull/inequalities.hpp"
#include "rihull/power_tail.hpp"
#include "rihull/value.hpp"
#include "rihull/weighted_space.hpp"

namespace rihull {

// A weighted-space / weight / exponent triple with the derived quantities
// of the hull analysis: T = esssup v, S the largest level below which the
// lower distribution stays finite, kappa_S = mu{v < S}, and the
// nondecreasing rearrangement v_low of v.
struct HullInstance {
  WeightedSpace space;
  StepFunction v;
  Rat p;

  StepFunction v_low;
  ExtScalar T;
  ExtScalar S;
  ExtScalar kappa_S;
  bool vstar_zero = false;  // mu{v = 0} infinite

  HullInstance(WeightedSpace sp, StepFunction weight, Rat exponent);
};

enum class HullCase { KappaInfinite, FiniteS, InfiniteS, EpsilonZero, VstarZero };
std::string to_string(HullCase c);

struct WitnessReport {
  StepFunction f;
  bool equimeasurable_with_g = false;
  Value lambda_pow_p;  // integral of g*(t)^p v_*(t) dt
  Value lp_pow_p;      // integral of f^p v dmu
  Value lambda_norm;
  Value lp_norm;
  Rat epsilon_used;
  HullCase tag = HullCase::FiniteS;
  bool sandwich_holds = false;  // lambda <= lp <= (1+eps)^p lambda, p-th powers
};

// integral over (0, inf) of g_star(t)^p w(t) dt, both step functions on the
// half-line; g_star is treated as 0 past its domain, and 0 * inf = 0.
Value halfline_lambda_pow_p(const StepFunction& g_star, const StepFunction& w, const Rat& p);

// (integral of f^p v dmu)^{1/p} and its p-th power.
Value weighted_lp_pow_p(const StepFunction& f, const WeightedSpace& sp, const StepFunction& v,
                        const Rat& p);
Value weighted_lp_norm(const StepFunction& f, const WeightedSpace& sp, const StepFunction& v,
                       const Rat& p);

// Exact p-th-power comparison of the Lorentz-type functional against the
// weighted norm (integer p): lhs = integral (f^{*mu})^p v_* dt, rhs =
// integral f^p v dmu. Cross-checked against the reverse inequality applied
// to the pair (f^p, v).
InequalityReport hull_lower_bound(const StepFunction& f, const HullInstance& inst);

// The equimeasurable witness with lambda <= lp <= (1+eps) lambda. eps = 0
// needs a full value-ordered transform for v.
WitnessReport hull_witness(const StepFunction& g_star, const HullInstance& inst,
                           const Rat& epsilon);

// The degenerate branch for weights whose zero set has infinite mass:
// the witness lives on the zero set and has weighted norm exactly 0.
WitnessReport hull_witness_degenerate(const StepFunction& g_star, const HullInstance& inst,
                                      const Rat& epsilon);

// The degenerate branch for strictly positive decaying power weights on
// Lebesgue (0, inf): pieces of g_star are placed far out where the weight
// is certified below per-piece thresholds summing to at most epsilon^p.
WitnessReport hull_witness_powertail(const StepFunction& g_star, const PowerTail& v, const Rat& p,
                                     const Rat& epsilon);

struct HullCampaignReport {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;
};

// Batch driver: lower bound for every sample, then the applicable witness
// for each (sample, epsilon) pair.
HullCampaignReport ri_hull_verify(const HullInstance& inst,
                                  const std::vector<StepFunction>& sample_gs,
                                  const std::vector<Rat>& epsilons);

}  // namespace rihull
