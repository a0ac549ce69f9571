#pragma once

#include <optional>
#include <vector>

#include "rihull/value.hpp"
#include "rihull/weighted_space.hpp"

namespace rihull {

// Two measures on a shared domain, given by densities against length.
struct TwoMeasures {
  Interval domain;
  StepFunction w_mu;
  StepFunction w_nu;

  TwoMeasures(Interval dom, StepFunction mu_density, StepFunction nu_density);
  WeightedSpace mu() const { return WeightedSpace(w_mu); }
  WeightedSpace nu() const { return WeightedSpace(w_nu); }
};

// True iff w_mu vanishes wherever w_nu does (piecewise, exact).
bool check_abs_continuity(const TwoMeasures& m);

// The density of mu against nu: w_mu / w_nu on {w_nu > 0}, 0 elsewhere
// (the remainder is mu-null when mu << nu).
StepFunction radon_nikodym(const TwoMeasures& m);

// Exact K-functional at 1: integral of f^* over (0, min(mu(R), 1)).
ExtScalar l1_plus_linf_norm(const StepFunction& f, const WeightedSpace& sp);

// integral of f^p dnu, exact for integer p, enclosure otherwise.
Value lp_pow_p(const StepFunction& f, const WeightedSpace& nu, const Rat& p);
Value lp_norm(const StepFunction& f, const WeightedSpace& nu, const Rat& p);

struct EmbeddingResult {
  bool absolutely_continuous = false;
  Rat p;
  std::optional<Rat> pprime;  // p/(p-1); empty at the p = 1 endpoint
  Value A_pow_pprime;         // meaningful for p > 1
  Value A;
  bool embeds = false;           // A < inf
  Rat budget;                    // min(mu(R), 1)
  ExtScalar level_threshold;     // value of (dmu/dnu)^{*mu} at the budget
};

// Optimal constant of L^p(nu) -> (L^1+L^inf)(mu), via the rearrangement
// reduction A^{p'} = integral over (0, min(mu(R),1)) of ((dmu/dnu)^{*mu})^{p'-1}.
// p = 1 returns the mu-esssup of dmu/dnu.
EmbeddingResult embedding_constant(const TwoMeasures& m, const Rat& p);

// A superlevel set of d with mu-mass exactly `budget`: all pieces above the
// threshold plus a carved part of the threshold level. budget <= mu(R).
struct SuperlevelSet {
  std::vector<Interval> parts;
  ExtScalar threshold;
};
SuperlevelSet carve_superlevel(const StepFunction& d, const WeightedSpace& sp, const Rat& budget);

struct SampleCheck {
  Value lhs;  // l1_plus_linf_norm
  Value rhs;  // A * lp_norm
  bool ok = false;
};

struct EmbeddingVerification {
  EmbeddingResult result;
  std::vector<SampleCheck> samples;
  bool all_samples_ok = true;
  StepFunction extremal;
  Value extremal_ratio;
  bool extremal_attains = false;  // ratio >= A(1 - 1e-9), certified
};

// Checks the norm inequality on each sample and builds the extremal
// candidate (dmu/dnu)^{p'-1} restricted to the optimal superlevel set
// (rational approximation of the values when the power is irrational).
EmbeddingVerification verify_embedding_norm(const TwoMeasures& m, const Rat& p,
                                            const std::vector<StepFunction>& samples);

struct CorollaryReport {
  Value k_norm;  // ||v^{-1/(p-1)}|| in (L^1+L^inf)(mu), via rearrangement
  bool finite = false;
  Value a_pow_pprime;        // from embedding_constant with dnu = v dmu
  bool identity_holds = false;  // a_pow_pprime equals k_norm
};

// The change-of-measure identity between the embedding constant for
// dnu = v dmu and the mixed-norm of v^{-1/(p-1)}.
CorollaryReport corollary_check(const WeightedSpace& sp, const StepFunction& v, const Rat& p);

}  // namespace rihull
