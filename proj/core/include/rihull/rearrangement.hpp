#pragma once

#include <vector>

#include "rihull/weighted_space.hpp"

namespace rihull {

// Distinct values of f carrying positive mu-mass, ascending. Zero-density
// pieces are mu-null and never contribute a group. Masses are exact and may
// be +inf.
struct ValueGroup {
  ExtScalar value;
  ExtScalar mass;
};
std::vector<ValueGroup> value_groups(const StepFunction& f, const WeightedSpace& sp);

// mu-essential supremum of f (0 on a null space).
ExtScalar esssup(const StepFunction& f, const WeightedSpace& sp);

// mu_f(s) = mu{f > s} as a step function of s on (0, inf). Requires f
// finite-valued.
StepFunction distribution(const StepFunction& f, const WeightedSpace& sp);

// kappa_f(s) = mu{f < s} on (0, inf); values may be +inf.
StepFunction lower_distribution(const StepFunction& f, const WeightedSpace& sp);

// Nonincreasing rearrangement f^* on (0, mu(R)). Requires mu(R) > 0.
StepFunction decreasing_rearrangement(const StepFunction& f, const WeightedSpace& sp);

// Nondecreasing rearrangement f_* on (0, inf); equals +inf on (mu(R), inf)
// when mu(R) < inf, and is identically 0 when mu{f = 0} = inf.
StepFunction increasing_rearrangement(const StepFunction& f, const WeightedSpace& sp);

// Pointwise defining formulas, evaluated exactly at a non-breakpoint t > 0.
// Used to cross-check the layout constructions above.
ExtScalar sup_formula_at(const StepFunction& nondecreasing, const Rat& t);   // sup{s: k(s) < t}, sup 0 of empty
ExtScalar inf_formula_at(const StepFunction& nondecreasing, const Rat& t);   // inf{s: k(s) >= t}, inf inf of empty
ExtScalar dec_inf_formula_at(const StepFunction& nonincreasing, const Rat& t);  // inf{s: m(s) <= t}

bool equimeasurable(const StepFunction& f, const WeightedSpace& spf,
                    const StepFunction& g, const WeightedSpace& spg);

// On finite spaces, f_*(t) = f^*(mu(R) - t) for a.e. t in (0, mu(R)).
bool finite_space_duality_check(const StepFunction& f, const WeightedSpace& sp);

// Integral of f both directly and through the layer-cake formula
// ∫ f dmu = ∫_0^inf mu_f(s) ds.
bool layer_cake_check(const StepFunction& f, const WeightedSpace& sp);

}  // namespace rihull
