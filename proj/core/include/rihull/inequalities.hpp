#pragma once

#include <vector>

#include "rihull/rearrangement.hpp"
#include "rihull/weighted_space.hpp"

namespace rihull {

struct InequalityReport {
  ExtScalar lhs;
  ExtScalar rhs;
  bool holds = false;
  ExtScalar slack;  // |lhs - rhs| when both finite, 0 when both infinite
};

// lhs = integral of f*g over mu, rhs = integral of f^* g^* over (0, mu(R)),
// holds = (lhs <= rhs). Exact.
InequalityReport hardy_littlewood(const StepFunction& f, const StepFunction& g,
                                  const WeightedSpace& sp);

// lhs as above, rhs = integral of f^*(t) g_*(t) over (0, mu(R)),
// holds = (lhs >= rhs). Exact, with 0 * inf = 0 on the tail.
InequalityReport reverse_hardy_littlewood(const StepFunction& f, const StepFunction& g,
                                          const WeightedSpace& sp);

// One nested layer of a simple function: alpha * indicator of a finite-mass
// interval. Layers must be nested increasing (set[i] inside set[i+1]).
struct SimpleLayer {
  Rat alpha;  // >= 0
  Interval set;
};

struct ChainReport {
  ExtScalar direct;  // sum of alpha_i * integral of g over E_i
  ExtScalar middle;  // sum of alpha_i * integral of g_* over (0, mu(E_i))
  ExtScalar rhs;     // integral of f^* g_* with f = sum alpha_i 1_{E_i}
  bool holds = false;
};

// The two-step chain direct >= middle >= rhs, every link exact. The second
// link is an equality for nested layers.
ChainReport reverse_hl_simple_chain(const std::vector<SimpleLayer>& layers, const StepFunction& g,
                                    const WeightedSpace& sp);

struct SandwichReport {
  ExtScalar lower;   // reverse rhs
  ExtScalar middle;  // integral of f*g over mu
  ExtScalar upper;   // forward rhs
  bool holds = false;
};

// lower <= middle <= upper in one pass.
SandwichReport hl_sandwich(const StepFunction& f, const StepFunction& g, const WeightedSpace& sp);

}  // namespace rihull
