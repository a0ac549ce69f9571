#include "rihull/inequalities.hpp"

#include "rihull/errors.hpp"

namespace rihull {

namespace {

const ExtScalar kZero{Rat(0)};

ExtScalar abs_gap(const ExtScalar& a, const ExtScalar& b) {
  if (a.is_finite() && b.is_finite()) {
    Rat d = a.finite() - b.finite();
    return ExtScalar(d < Rat(0) ? -d : d);
  }
  if (!a.is_finite() && !b.is_finite()) return kZero;
  return ExtScalar::infinity();
}

ExtScalar pairing(const StepFunction& f, const StepFunction& g, const WeightedSpace& sp) {
  return integrate(StepFunction::multiply(f, g), sp);
}

// Integral of the product of two step functions on the rearrangement
// half-line against length, truncated at mu(R).
ExtScalar halfline_product_integral(const StepFunction& a, const StepFunction& b) {
  ExtScalar total = kZero;
  for (const auto& p : refined_pieces(a, b)) {
    total = total + p.f * p.g * p.iv.length();
  }
  return total;
}

}  // namespace

InequalityReport hardy_littlewood(const StepFunction& f, const StepFunction& g,
                                  const WeightedSpace& sp) {
  InequalityReport rep;
  rep.lhs = pairing(f, g, sp);
  if (sp.total() == kZero) {
    rep.rhs = kZero;
  } else {
    auto fstar = decreasing_rearrangement(f, sp);
    auto gstar = decreasing_rearrangement(g, sp);
    rep.rhs = halfline_product_integral(fstar, gstar);
  }
  rep.holds = rep.lhs <= rep.rhs;
  rep.slack = abs_gap(rep.lhs, rep.rhs);
  return rep;
}

InequalityReport reverse_hardy_littlewood(const StepFunction& f, const StepFunction& g,
                                          const WeightedSpace& sp) {
  InequalityReport rep;
  rep.lhs = pairing(f, g, sp);
  ExtScalar total = sp.total();
  if (total == kZero) {
    rep.rhs = kZero;
  } else {
    auto fstar = decreasing_rearrangement(f, sp);
    auto glow = increasing_rearrangement(g, sp);
    if (total.is_finite()) glow = glow.restrict_to(fstar.domain());
    rep.rhs = halfline_product_integral(fstar, glow);
  }
  rep.holds = rep.lhs >= rep.rhs;
  rep.slack = abs_gap(rep.lhs, rep.rhs);
  return rep;
}

ChainReport reverse_hl_simple_chain(const std::vector<SimpleLayer>& layers, const StepFunction& g,
                                    const WeightedSpace& sp) {
  for (std::size_t i = 0; i + 1 < layers.size(); ++i) {
    if (!layers[i + 1].set.contains(layers[i].set))
      throw non_nested_layers("layer " + std::to_string(i + 1) + " does not contain layer " +
                              std::to_string(i));
  }
  ChainReport rep;
  rep.direct = kZero;
  rep.middle = kZero;
  auto glow = increasing_rearrangement(g, sp);
  StepFunction f = StepFunction::constant(sp.domain(), kZero);
  for (const auto& layer : layers) {
    if (layer.alpha < Rat(0)) throw error("layer coefficients must be nonnegative");
    ExtScalar mass = sp.measure(layer.set);
    if (!mass.is_finite()) throw non_nested_layers("layer of infinite mass");
    ExtScalar alpha{layer.alpha};
    rep.direct = rep.direct + alpha * integrate(g.mask({layer.set}), sp);
    if (!(mass == kZero)) {
      auto seg = glow.restrict_to(Interval(Rat(0), mass.finite()));
      rep.middle = rep.middle + alpha * integrate(seg, WeightedSpace::lebesgue(seg.domain()));
    }
    f = StepFunction::add(f, StepFunction::constant(sp.domain(), alpha).mask({layer.set}));
  }
  rep.rhs = reverse_hardy_littlewood(f, g, sp).rhs;
  rep.holds = rep.direct >= rep.middle && rep.middle >= rep.rhs;
  return rep;
}

SandwichReport hl_sandwich(const StepFunction& f, const StepFunction& g, const WeightedSpace& sp) {
  SandwichReport rep;
  rep.lower = reverse_hardy_littlewood(f, g, sp).rhs;
  rep.middle = pairing(f, g, sp);
  rep.upper = hardy_littlewood(f, g, sp).rhs;
  rep.holds = rep.lower <= rep.middle && rep.middle <= rep.upper;
  return rep;
}

}  // namespace rihull
