#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rihull/embedding.hpp"
#include "rihull/inequalities.hpp"
#include "rihull/weighted_space.hpp"

namespace rihull {

// Seeded instance generators for property campaigns. Every draw goes through
// operator() and modular reduction only, so a seed produces the same stream
// on every standard library (distributions are not portable).
using Rng = std::mt19937_64;

std::uint64_t draw(Rng& rng, std::uint64_t n);  // uniform in [0, n)

Rat random_rat(Rng& rng, long max_num = 1000, long max_den = 1000);         // > 0
Rat random_rat_nonneg(Rng& rng, long max_num = 1000, long max_den = 1000);  // 0 one time in four

enum class DomainKind { Bounded, HalfLine, WholeLine };
Interval random_domain(Rng& rng, DomainKind kind);
Interval random_domain(Rng& rng);

struct StepOptions {
  std::size_t max_pieces = 8;
  bool allow_zero = true;   // zero-valued pieces
  bool zero_tails = false;  // force 0 on unbounded end pieces (bounded support)
  bool ensure_positive = false;
};
StepFunction random_step(Rng& rng, const Interval& domain, const StepOptions& opt = {});

// Density finite, nonnegative, positive somewhere. finite_mass forces zero
// density on unbounded ends.
WeightedSpace random_space(Rng& rng, DomainKind kind, bool finite_mass);
WeightedSpace random_space(Rng& rng);

// Nonincreasing positive profile on (0, mass), optionally ending in a zero
// piece: a ready-made decreasing rearrangement.
StepFunction random_profile(Rng& rng, const Rat& mass, std::size_t max_pieces = 6,
                            bool allow_zero_tail = true);

struct SpaceAndFunction {
  WeightedSpace space;
  StepFunction f;
};

// Instances whose mass strictly below the essential sup is finite (a
// value-ordered transform exists): either a finite-mass space, or the top
// value occupying every unbounded direction.
SpaceAndFunction random_cond_i_instance(Rng& rng);

// Instances with infinite mass strictly below a positive top: bounded
// support over a density with a positive unbounded run.
SpaceAndFunction random_neither_instance(Rng& rng);

// mu << nu on a shared domain (w_mu = w_nu * random factor).
TwoMeasures random_abs_continuous_pair(Rng& rng, bool finite_mu);

// Nested finite-mass layers E_1 inside E_2 inside ... within the domain.
std::vector<SimpleLayer> random_nested_layers(Rng& rng, const WeightedSpace& sp,
                                              std::size_t max_layers = 5);

}  // namespace rihull
