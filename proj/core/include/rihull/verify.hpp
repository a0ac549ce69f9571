#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rihull {

// One campaign outcome. A criterion passes only when it ran cases and none
// failed; notes carry class tallies and first-failure diagnostics.
struct CriterionResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double seconds = 0;
  std::vector<std::string> notes;
  bool passed() const { return cases > 0 && failures == 0; }
};

// Distribution identity, pointwise formulas, finite-space reflection,
// domination, restriction, infinite-tail conventions, layer cake.
CriterionResult verify_rearrangement_axioms(std::uint64_t seed, std::size_t cases);

// Finite decreasing chains f_1 >= ... >= f_n = f: lower distributions
// ascend to kappa_f and the nondecreasing rearrangements descend to f_*,
// with exact terminal equality.
CriterionResult verify_monotone_chains(std::uint64_t seed, std::size_t chains);

// Value-ordered transforms: built maps pass the exact checker and reproduce
// f by composition; impossible instances are certified impossible.
CriterionResult verify_transform_construction(std::uint64_t seed, std::size_t cases);

// Reverse and forward rearrangement inequalities, the f = 1 equality on
// finite spaces, and the nested simple-function chain.
CriterionResult verify_reverse_inequality(std::uint64_t seed, std::size_t cases);

// Optimal embedding constant vs the greedy set search (exact for integer
// conjugate shift, 1e-9 relative otherwise), the norm inequality on
// samples, and near-attainment by the extremal candidate.
CriterionResult verify_embedding_campaign(std::uint64_t seed, std::size_t cases);

// Lower bound on every instance; equimeasurable witnesses with the
// two-sided sandwich for epsilon in {0 when eligible, 1/10}; degenerate
// witnesses with certified small norm.
CriterionResult verify_hull_campaign(std::uint64_t seed, std::size_t lower_cases,
                                     std::size_t witness_target);

// Monomial-weight class decisions on the exponent grid, the defining
// inequality at random points, the change-of-measure identity, the power
// weight rearrangement, and the classical Lorentz identification.
CriterionResult verify_weight_class_grid(std::uint64_t seed);

// Differential testing against the floating grid engine: rearrangements,
// norms, embedding constants.
CriterionResult verify_oracle_differential(std::uint64_t seed, std::size_t per_family,
                                           std::size_t grid_n);

// All eight campaigns at the pinned acceptance sizes.
std::vector<CriterionResult> verify_everything(std::uint64_t seed);

}  // namespace rihull
