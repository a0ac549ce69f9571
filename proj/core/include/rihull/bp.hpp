#pragma once

#include <vector>

#include "rihull/power_tail.hpp"
#include "rihull/weighted_space.hpp"

namespace rihull {

struct BpReport {
  bool in_class = false;
  Value constant;  // sup over r of the averaging ratio; +inf when not in class
  bool exact_constant = false;
  std::vector<Rat> checked_grid;
  Rat near0_exponent;  // exponent of the first piece
  Rat tail_exponent;   // exponent of the last piece
  Rat critical;        // p - 1
};

// Decides whether integral_r^inf w(t)/t^p dt <= C r^{-p} integral_0^r w dt
// holds with a finite C. Membership is decided by exact exponent
// comparisons; the constant is exact for a single monomial and a certified
// enclosure otherwise (endpoint analysis on the outer regimes, bisection
// bounds inside).
BpReport bp_check(const PowerTail& w, const Rat& p);

// Ratio L(r) r^p / W(r) at one point, as a certified Value.
Value bp_ratio_at(const PowerTail& w, const Rat& p, const Rat& r);

// The nondecreasing rearrangement of |x|^alpha on the line: (t/2)^alpha.
PowerTail power_weight_rearrangement(const Rat& alpha);

struct LorentzIdentityReport {
  Rat q;  // p / (alpha + 1)
  bool exponent_identity = false;   // p/q - 1 == alpha
  bool integrand_match = false;     // both functional values agree
  bool scaling_match = false;       // half-scale weight scales by 2^{-alpha}
  Value lambda_pow_plain;
  Value lambda_pow_scaled;
};

// The classical Lorentz identification for the power weight t^alpha.
LorentzIdentityReport classical_lorentz_identity_check(const StepFunction& g_star,
                                                       const Rat& alpha, const Rat& p);

struct BanachChainReport {
  bool bp_ok = false;
  std::size_t checked = 0;
  bool first_inclusion_ok = true;   // Lorentz functional below the weighted norm
  bool second_inclusion_ok = true;  // finite Lorentz functional gives finite mixed norm
};

// The two-inclusion chain for the rearranged weight, on a sample family.
BanachChainReport bp_implies_banach_chain_check(const WeightedSpace& sp, const StepFunction& v,
                                                const Rat& p,
                                                const std::vector<StepFunction>& samples);

}  // namespace rihull
