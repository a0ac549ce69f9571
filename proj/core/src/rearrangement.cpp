#include "rihull/rearrangement.hpp"

#include <map>

#include "rihull/errors.hpp"

namespace rihull {

std::vector<ValueGroup> value_groups(const StepFunction& f, const WeightedSpace& sp) {
  std::map<ExtScalar, ExtScalar> acc;
  for (const RefinedPiece& p : refined_pieces(f, sp.density())) {
    const ExtScalar mass = p.g * p.iv.length();
    if (mass.is_zero()) continue;
    auto [it, inserted] = acc.emplace(p.f, mass);
    if (!inserted) it->second = it->second + mass;
  }
  std::vector<ValueGroup> out;
  out.reserve(acc.size());
  for (auto& [v, m] : acc) out.push_back(ValueGroup{v, m});
  return out;
}

ExtScalar esssup(const StepFunction& f, const WeightedSpace& sp) {
  const auto groups = value_groups(f, sp);
  return groups.empty() ? ExtScalar(Rat(0)) : groups.back().value;
}

StepFunction distribution(const StepFunction& f, const WeightedSpace& sp) {
  if (!f.all_finite()) throw error("distribution of a function with infinite values");
  const auto groups = value_groups(f, sp);
  std::vector<const ValueGroup*> pos;
  for (const ValueGroup& g : groups)
    if (g.value.sgn() > 0) pos.push_back(&g);
  // suffix[i] = mass of {f >= value of group i}; suffix[m] = 0 past the top.
  std::vector<ExtScalar> suffix(pos.size() + 1, ExtScalar(Rat(0)));
  for (std::size_t i = pos.size(); i-- > 0;) suffix[i] = suffix[i + 1] + pos[i]->mass;
  std::vector<Rat> breaks;
  std::vector<ExtScalar> vals;
  vals.push_back(suffix[0]);
  for (std::size_t i = 0; i < pos.size(); ++i) {
    breaks.push_back(pos[i]->value.finite());
    vals.push_back(suffix[i + 1]);
  }
  return StepFunction(Interval::positive_halfline(), std::move(breaks), std::move(vals));
}

StepFunction lower_distribution(const StepFunction& f, const WeightedSpace& sp) {
  if (!f.all_finite()) throw error("lower distribution of a function with infinite values");
  const auto groups = value_groups(f, sp);
  ExtScalar cum(Rat(0));
  std::size_t start = 0;
  if (!groups.empty() && groups[0].value.is_zero()) {
    cum = groups[0].mass;
    start = 1;
  }
  std::vector<Rat> breaks;
  std::vector<ExtScalar> vals;
  vals.push_back(cum);
  for (std::size_t i = start; i < groups.size(); ++i) {
    breaks.push_back(groups[i].value.finite());
    cum = cum + groups[i].mass;
    vals.push_back(cum);
  }
  return StepFunction(Interval::positive_halfline(), std::move(breaks), std::move(vals));
}

namespace {

// Shared layout: lays group masses end to end from 0 in the given order.
// Returns pieces as (value, cut list); an infinite mass ends the layout.
struct Layout {
  std::vector<Rat> breaks;
  std::vector<ExtScalar> vals;
  Rat cum{0};
  bool open_ended = false;  // last piece runs to +inf

  void emit(const ExtScalar& value, const ExtScalar& mass) {
    if (open_ended) throw error("layout past an infinite group");
    if (mass.is_zero()) return;
    if (!vals.empty()) breaks.push_back(cum);
    vals.push_back(value);
    if (mass.is_inf()) {
      open_ended = true;
    } else {
      cum += mass.finite();
    }
  }
};

}  // namespace

StepFunction decreasing_rearrangement(const StepFunction& f, const WeightedSpace& sp) {
  if (!f.all_finite()) throw error("rearrangement of a function with infinite values");
  const ExtScalar total = sp.total();
  if (total.is_zero()) throw error("rearrangement over a null space");
  const auto groups = value_groups(f, sp);
  Layout lay;
  for (std::size_t i = groups.size(); i-- > 0;) {
    lay.emit(groups[i].value, groups[i].mass);
    if (lay.open_ended) break;
  }
  Interval dom = total.is_inf() ? Interval::positive_halfline()
                                : Interval::bounded(Rat(0), total.finite());
  return StepFunction(std::move(dom), std::move(lay.breaks), std::move(lay.vals));
}

StepFunction increasing_rearrangement(const StepFunction& f, const WeightedSpace& sp) {
  if (!f.all_finite()) throw error("rearrangement of a function with infinite values");
  const auto groups = value_groups(f, sp);
  Layout lay;
  for (const ValueGroup& g : groups) {
    lay.emit(g.value, g.mass);
    if (lay.open_ended) break;
  }
  if (!lay.open_ended) {
    // mu(R) is finite here; beyond it the rearrangement is +inf.
    lay.emit(ExtScalar::infinity(), ExtScalar::infinity());
  }
  return StepFunction(Interval::positive_halfline(), std::move(lay.breaks),
                      std::move(lay.vals));
}

ExtScalar sup_formula_at(const StepFunction& k, const Rat& t) {
  // k nondecreasing on (0, inf): {s : k(s) < t} is an initial run of pieces.
  ExtScalar sup(Rat(0));
  for (std::size_t i = 0; i < k.piece_count(); ++i) {
    if (k.value(i) < ExtScalar(t)) {
      const Interval piece = k.piece(i);
      sup = piece.hi ? ExtScalar(*piece.hi) : ExtScalar::infinity();
    }
  }
  return sup;
}

ExtScalar inf_formula_at(const StepFunction& k, const Rat& t) {
  for (std::size_t i = 0; i < k.piece_count(); ++i) {
    if (k.value(i) >= ExtScalar(t)) {
      const Interval piece = k.piece(i);
      return piece.lo ? ExtScalar(*piece.lo) : ExtScalar(Rat(0));
    }
  }
  return ExtScalar::infinity();
}

ExtScalar dec_inf_formula_at(const StepFunction& m, const Rat& t) {
  for (std::size_t i = 0; i < m.piece_count(); ++i) {
    if (m.value(i) <= ExtScalar(t)) {
      const Interval piece = m.piece(i);
      return piece.lo ? ExtScalar(*piece.lo) : ExtScalar(Rat(0));
    }
  }
  return ExtScalar::infinity();
}

bool equimeasurable(const StepFunction& f, const WeightedSpace& spf,
                    const StepFunction& g, const WeightedSpace& spg) {
  return distribution(f, spf) == distribution(g, spg);
}

bool finite_space_duality_check(const StepFunction& f, const WeightedSpace& sp) {
  const ExtScalar total = sp.total();
  if (total.is_inf()) throw error("duality check needs a finite measure space");
  if (total.is_zero()) return true;
  const Rat m = total.finite().abs();
  const StepFunction fstar = decreasing_rearrangement(f, sp);
  const StepFunction flow =
      increasing_rearrangement(f, sp).restrict_to(Interval::bounded(Rat(0), m));
  return flow == fstar.reflect(m);
}

bool layer_cake_check(const StepFunction& f, const WeightedSpace& sp) {
  const ExtScalar direct = integrate(f, sp);
  const ExtScalar layered =
      integrate(distribution(f, sp), WeightedSpace::lebesgue(Interval::positive_halfline()));
  return direct == layered;
}

}  // namespace rihull
