#include "rihull/mpt.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "rihull/errors.hpp"

namespace rihull {

Interval AffinePiece::target() const {
  auto image = [&](const std::optional<Rat>& e) -> std::optional<Rat> {
    if (!e) return std::nullopt;
    return map(*e);
  };
  if (slope > Rat(0)) return Interval(image(source.lo), image(source.hi));
  return Interval(image(source.hi), image(source.lo));
}

std::string to_string(RyffCase c) {
  switch (c) {
    case RyffCase::CondI: return "cond-i";
    case RyffCase::CondII: return "cond-ii";
    default: return "neither";
  }
}

RyffVerdict ryff_conditions(const StepFunction& f, const WeightedSpace& sp) {
  if (!f.all_finite()) throw error("ryff_conditions requires a finite function");
  auto groups = value_groups(f, sp);
  RyffVerdict v;
  if (groups.empty()) {
    v.tag = RyffCase::CondI;
    v.top = ExtScalar(Rat(0));
    v.kappa_at_top = ExtScalar(Rat(0));
    v.top_mass = sp.total();
    return v;
  }
  v.top = groups.back().value;
  v.top_mass = groups.back().mass;
  ExtScalar below(Rat(0));
  for (std::size_t i = 0; i + 1 < groups.size(); ++i) below = below + groups[i].mass;
  v.kappa_at_top = below;
  if (below.is_finite()) {
    v.tag = RyffCase::CondI;
    return v;
  }
  // A step function attains its esssup on a set of positive measure, so the
  // zero-mass-at-top alternative cannot hold; the esssup itself witnesses
  // failure: kappa_f(T) = inf while mu{f >= T} > 0.
  v.tag = RyffCase::Neither;
  v.witness = v.top.finite();
  return v;
}

namespace {

struct SourceRun {
  Interval iv;
  Rat density;
};

// Lays out runs left to right onto (base, base + total mass). At most one
// run may be unbounded; it is emitted last and consumes the open tail.
MPTransform layout_runs(const Interval& domain, const std::vector<SourceRun>& runs,
                        const Rat& base) {
  std::vector<const SourceRun*> finite_runs;
  const SourceRun* open_run = nullptr;
  for (const auto& r : runs) {
    if (r.iv.is_bounded()) {
      finite_runs.push_back(&r);
    } else {
      if (open_run) throw mpt_unrepresentable("two unbounded sources of infinite mass");
      open_run = &r;
    }
  }
  MPTransform sigma{domain, {}};
  Rat cum = base;
  for (const auto* r : finite_runs) {
    Rat slope = r->density;
    sigma.pieces.push_back(AffinePiece{r->iv, cum - slope * *r->iv.lo, slope});
    cum = cum + slope * (*r->iv.hi - *r->iv.lo);
  }
  if (open_run) {
    Rat slope;
    Rat anchor;
    if (open_run->iv.lo) {
      slope = open_run->density;
      anchor = *open_run->iv.lo;
    } else if (open_run->iv.hi) {
      slope = -open_run->density;
      anchor = *open_run->iv.hi;
    } else {
      throw mpt_unrepresentable("source unbounded in both directions");
    }
    sigma.pieces.push_back(AffinePiece{open_run->iv, cum - slope * anchor, slope});
  }
  return sigma;
}

MPTransform build_ordered(const StepFunction& f, const WeightedSpace& sp, bool increasing) {
  // Group positive-density refined pieces by value, preserving position
  // order inside each group.
  auto pieces = refined_pieces(f, sp.density());
  std::map<ExtScalar, std::vector<SourceRun>> by_value;
  for (const auto& p : pieces) {
    if (p.g == ExtScalar(Rat(0))) continue;
    by_value[p.f].push_back(SourceRun{p.iv, p.g.finite()});
  }
  std::vector<SourceRun> ordered;
  auto append_group = [&](const std::vector<SourceRun>& g) {
    for (const auto& r : g) ordered.push_back(r);
  };
  if (increasing) {
    for (const auto& [val, g] : by_value) append_group(g);
  } else {
    for (auto it = by_value.rbegin(); it != by_value.rend(); ++it) append_group(it->second);
  }
  // Every group before the last laid-out one must be finite, or the
  // cumulative offset is undefined. The classification above guarantees
  // this for representable inputs; re-check while laying out.
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    if (!ordered[i].iv.is_bounded() && i + 1 < ordered.size()) {
      // An unbounded run may only be part of the final group.
      const ExtScalar tail_value =
          increasing ? by_value.rbegin()->first : by_value.begin()->first;
      bool in_tail_group = false;
      for (const auto& r : by_value[tail_value])
        if (r.iv.lo == ordered[i].iv.lo && r.iv.hi == ordered[i].iv.hi) in_tail_group = true;
      if (!in_tail_group)
        throw error("infinite-mass group out of order; classification should have rejected this");
    }
  }
  return layout_runs(f.domain(), ordered, Rat(0));
}

}  // namespace

MPTransform build_increasing_mpt(const StepFunction& f, const WeightedSpace& sp) {
  auto verdict = ryff_conditions(f, sp);
  if (verdict.tag == RyffCase::Neither) {
    throw ryff_neither("no value-ordered transform: kappa is infinite below level " +
                       verdict.witness->str() + " which carries positive mass");
  }
  return build_ordered(f, sp, true);
}

MPTransform build_decreasing_mpt(const StepFunction& f, const WeightedSpace& sp) {
  auto groups = value_groups(f, sp);
  for (const auto& g : groups) {
    if (g.value > ExtScalar(Rat(0)) && !g.mass.is_finite())
      throw error("reverse-ordered transform needs finite positive level sets");
  }
  return build_ordered(f, sp, false);
}

MPTransform build_onto_halfline(const std::vector<Interval>& set, const WeightedSpace& sp,
                                const Rat& base) {
  auto parts = normalize_union(set);
  std::vector<SourceRun> runs;
  for (const auto& part : parts) {
    for (std::size_t i = 0; i < sp.density().piece_count(); ++i) {
      if (sp.density().value(i) == ExtScalar(Rat(0))) continue;
      auto inter = intersect(sp.density().piece(i), part);
      if (inter) runs.push_back(SourceRun{*inter, sp.density().value(i).finite()});
    }
  }
  std::sort(runs.begin(), runs.end(),
            [](const SourceRun& a, const SourceRun& b) { return cmp_lower(a.iv.lo, b.iv.lo) < 0; });
  // Keep position order among bounded runs; layout_runs moves the single
  // unbounded run (if any) to the tail slot.
  return layout_runs(sp.domain(), runs, base);
}

MptCheck verify_mpt(const MPTransform& sigma, const WeightedSpace& sp) {
  MptCheck res;
  auto fail = [&](std::string why) {
    res.ok = false;
    res.diagnostic = std::move(why);
    return res;
  };
  if (!(sigma.domain.lo == sp.domain().lo && sigma.domain.hi == sp.domain().hi))
    return fail("transform domain differs from the space domain");

  struct Leg {
    const AffinePiece* p;
    Interval target;
  };
  std::vector<Leg> legs;
  for (const auto& p : sigma.pieces) {
    if (p.slope == Rat(0)) return fail("zero slope");
    if (!sp.domain().contains(p.source)) return fail("source escapes the domain");
    // Density must be constant and positive on the source.
    bool covered = false;
    for (std::size_t i = 0; i < sp.density().piece_count(); ++i) {
      if (sp.density().piece(i).contains(p.source)) {
        covered = true;
        const ExtScalar& dv = sp.density().value(i);
        if (dv == ExtScalar(Rat(0))) return fail("source has zero density");
        Rat d = dv.finite();
        Rat a = p.slope < Rat(0) ? -p.slope : p.slope;
        if (!(a == d)) return fail("|slope| differs from the density on a source");
        break;
      }
    }
    if (!covered) return fail("density is not constant on a source");
    if (!p.source.lo && p.slope > Rat(0)) return fail("positive slope on a left-unbounded source");
    if (!p.source.hi && p.slope < Rat(0)) return fail("negative slope on a right-unbounded source");
    legs.push_back(Leg{&p, p.target()});
  }

  // Pairwise disjoint sources.
  std::vector<const AffinePiece*> by_pos;
  for (const auto& l : legs) by_pos.push_back(l.p);
  std::sort(by_pos.begin(), by_pos.end(), [](const AffinePiece* a, const AffinePiece* b) {
    return cmp_lower(a->source.lo, b->source.lo) < 0;
  });
  for (std::size_t i = 0; i + 1 < by_pos.size(); ++i) {
    if (!disjoint(by_pos[i]->source, by_pos[i + 1]->source)) return fail("sources overlap");
  }

  // Uncovered parts of the domain must be mu-null.
  std::vector<Interval> sources;
  for (const auto& l : legs) sources.push_back(l.p->source);
  for (const auto& gap : complement_within(sp.domain(), sources)) {
    if (!(sp.measure(gap) == ExtScalar(Rat(0)))) return fail("a positive-mass gap is uncovered");
  }

  // Targets tile (0, mu(R)).
  std::sort(legs.begin(), legs.end(),
            [](const Leg& a, const Leg& b) { return cmp_lower(a.target.lo, b.target.lo) < 0; });
  ExtScalar total = sp.total();
  if (legs.empty()) {
    if (total == ExtScalar(Rat(0))) return res;
    return fail("no pieces but the space has positive mass");
  }
  if (!legs.front().target.lo || !(*legs.front().target.lo == Rat(0)))
    return fail("targets do not start at 0");
  for (std::size_t i = 0; i + 1 < legs.size(); ++i) {
    const auto& cur = legs[i].target;
    const auto& nxt = legs[i + 1].target;
    if (!cur.hi || !nxt.lo || !(*cur.hi == *nxt.lo)) return fail("targets leave a gap or overlap");
  }
  const auto& last = legs.back().target;
  if (total.is_finite()) {
    if (!last.hi || !(*last.hi == total.finite())) return fail("targets do not end at mu(R)");
  } else {
    if (last.hi) return fail("mu(R) is infinite but the targets are bounded");
  }
  return res;
}

StepFunction compose_with_rearrangement(const StepFunction& g_star, const MPTransform& sigma) {
  struct Fragment {
    Interval iv;
    ExtScalar value;
  };
  std::vector<Fragment> frags;
  std::vector<Interval> sources;
  for (const auto& p : sigma.pieces) {
    Interval tgt = p.target();
    if (!g_star.domain().contains(tgt))
      throw target_range_escape("a target leaves the rearrangement domain");
    sources.push_back(p.source);
    for (std::size_t i = 0; i < g_star.piece_count(); ++i) {
      auto sub = intersect(g_star.piece(i), tgt);
      if (!sub) continue;
      // Pull the target subinterval back through the affine leg.
      auto pre = [&](const std::optional<Rat>& e, bool source_low_side) -> std::optional<Rat> {
        if (e) return p.invert(*e);
        return source_low_side ? p.source.lo : p.source.hi;
      };
      Interval src_sub = p.slope > Rat(0) ? Interval(pre(sub->lo, true), pre(sub->hi, false))
                                          : Interval(pre(sub->hi, true), pre(sub->lo, false));
      frags.push_back(Fragment{src_sub, g_star.value(i)});
    }
  }
  for (const auto& gap : complement_within(sigma.domain, sources))
    frags.push_back(Fragment{gap, ExtScalar(Rat(0))});
  std::sort(frags.begin(), frags.end(),
            [](const Fragment& a, const Fragment& b) { return cmp_lower(a.iv.lo, b.iv.lo) < 0; });
  if (frags.empty()) return StepFunction::constant(sigma.domain, ExtScalar(Rat(0)));
  std::vector<Rat> breaks;
  std::vector<ExtScalar> values;
  for (std::size_t i = 0; i < frags.size(); ++i) {
    if (i > 0) breaks.push_back(*frags[i].iv.lo);
    values.push_back(frags[i].value);
  }
  return StepFunction(sigma.domain, std::move(breaks), std::move(values));
}

bool equal_mu_ae(const StepFunction& f, const StepFunction& g, const WeightedSpace& sp) {
  for (const auto& p : refined_pieces(f, g)) {
    if (p.f == p.g) continue;
    if (!(sp.measure(p.iv) == ExtScalar(Rat(0)))) return false;
  }
  return true;
}

}  // namespace rihull
