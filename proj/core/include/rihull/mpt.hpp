#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rihull/rearrangement.hpp"
#include "rihull/weighted_space.hpp"

namespace rihull {

// One affine leg sigma(x) = offset + slope * x on an open source interval.
// |slope| equals the (constant) density on the source, so interval length
// pushes forward to measure exactly. slope < 0 appears only for sources
// unbounded below, whose image must still be a right half-line.
struct AffinePiece {
  Interval source;
  Rat offset;
  Rat slope;  // nonzero

  Interval target() const;
  Rat map(const Rat& x) const { return offset + slope * x; }
  Rat invert(const Rat& y) const { return (y - offset) / slope; }
};

// Piecewise-affine measure-preserving map from (domain, mu) onto
// (0, mu(R)) with Lebesgue measure, defined off a mu-null set.
struct MPTransform {
  Interval domain;
  std::vector<AffinePiece> pieces;
};

enum class RyffCase { CondI, CondII, Neither };
std::string to_string(RyffCase c);

struct RyffVerdict {
  RyffCase tag;
  ExtScalar top;           // esssup f
  ExtScalar kappa_at_top;  // mu{f < esssup f}
  ExtScalar top_mass;      // mu{f = esssup f}
  std::optional<Rat> witness;  // Neither: level s with kappa_f(s) = inf, mu{f >= s} > 0
};

RyffVerdict ryff_conditions(const StepFunction& f, const WeightedSpace& sp);

// Value-ordered map with f = f_* o sigma a.e.; throws ryff_neither when no
// such map exists and mpt_unrepresentable when finitely many affine pieces
// cannot realize one (two unbounded source directions in the infinite-mass
// group).
MPTransform build_increasing_mpt(const StepFunction& f, const WeightedSpace& sp);

// Reverse-ordered map with f = f^* o sigma a.e.; requires every positive
// level set to have finite measure.
MPTransform build_decreasing_mpt(const StepFunction& f, const WeightedSpace& sp);

// Order-agnostic map of the positive-density part of `set` onto
// (base, base + mu(set)), laid out left to right. Any unbounded source takes
// the final open-ended slot.
MPTransform build_onto_halfline(const std::vector<Interval>& set, const WeightedSpace& sp,
                                const Rat& base);

struct MptCheck {
  bool ok = true;
  std::string diagnostic;
};

// Exact verification: sources disjoint and inside the domain, density
// constant per source with |slope| = density, complement of the sources
// mu-null, targets tiling (0, mu(sources)) without overlap or gap.
MptCheck verify_mpt(const MPTransform& sigma, const WeightedSpace& sp);

// g_star o sigma as a step function on sigma.domain (0 off the sources).
// Requires every target to lie inside g_star's domain.
StepFunction compose_with_rearrangement(const StepFunction& g_star, const MPTransform& sigma);

// Equality off mu-null sets.
bool equal_mu_ae(const StepFunction& f, const StepFunction& g, const WeightedSpace& sp);

}  // namespace rihull
