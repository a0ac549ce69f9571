#include "rihull/weighted_space.hpp"

#include "rihull/errors.hpp"

namespace rihull {

WeightedSpace::WeightedSpace(StepFunction density)
    : density_(std::move(density)), total_(Rat(0)) {
  if (!density_.all_finite()) throw error("density must be finite-valued");
  ExtScalar t(Rat(0));
  for (std::size_t i = 0; i < density_.piece_count(); ++i)
    t = t + density_.value(i) * density_.piece(i).length();
  total_ = t;
}

WeightedSpace WeightedSpace::lebesgue(Interval domain) {
  return WeightedSpace(StepFunction::constant(std::move(domain), ExtScalar(Rat(1))));
}

ExtScalar WeightedSpace::measure(const Interval& iv) const {
  ExtScalar m(Rat(0));
  for (std::size_t i = 0; i < density_.piece_count(); ++i) {
    if (auto c = intersect(density_.piece(i), iv)) m = m + density_.value(i) * c->length();
  }
  return m;
}

ExtScalar WeightedSpace::measure(const std::vector<Interval>& set) const {
  ExtScalar m(Rat(0));
  for (const Interval& iv : normalize_union(set)) m = m + measure(iv);
  return m;
}

WeightedSpace WeightedSpace::restricted(const std::vector<Interval>& set) const {
  return WeightedSpace(density_.mask(set));
}

ExtScalar integrate(const StepFunction& f, const WeightedSpace& sp) {
  ExtScalar total(Rat(0));
  for (const RefinedPiece& p : refined_pieces(f, sp.density())) {
    total = total + p.f * (p.g * p.iv.length());
  }
  return total;
}

std::vector<Interval> level_set(const StepFunction& f,
                                const std::function<bool(const ExtScalar&)>& pred) {
  std::vector<Interval> out;
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    if (pred(f.value(i))) out.push_back(f.piece(i));
  }
  return normalize_union(std::move(out));
}

}  // namespace rihull
