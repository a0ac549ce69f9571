#include "rihull/embedding.hpp"

#include <utility>

#include "rihull/errors.hpp"
#include "rihull/rearrangement.hpp"

namespace rihull {

namespace {

const ExtScalar kZero{Rat(0)};
const Rat kOne{1};

Rat enclosure_midpoint(const Value& v) {
  if (v.is_exact()) return v.exact().finite();
  return Rat::from_double_exact(v.enclosure().mid_double());
}

// Drops infinite values carried on mu-null pieces; returns inf if f is
// infinite on positive mass.
std::optional<StepFunction> finite_part(const StepFunction& f, const WeightedSpace& sp) {
  if (f.all_finite()) return f;
  auto groups = value_groups(f, sp);
  if (!groups.empty() && !groups.back().value.is_finite()) return std::nullopt;
  return f.map_values([](const ExtScalar& v) { return v.is_finite() ? v : kZero; });
}

}  // namespace

TwoMeasures::TwoMeasures(Interval dom, StepFunction mu_density, StepFunction nu_density)
    : domain(std::move(dom)), w_mu(std::move(mu_density)), w_nu(std::move(nu_density)) {
  if (!(w_mu.domain().lo == domain.lo && w_mu.domain().hi == domain.hi) ||
      !(w_nu.domain().lo == domain.lo && w_nu.domain().hi == domain.hi))
    throw domain_mismatch("densities must share the stated domain");
  if (!w_mu.all_finite() || !w_nu.all_finite())
    throw error("densities must be finite-valued");
}

bool check_abs_continuity(const TwoMeasures& m) {
  for (const auto& p : refined_pieces(m.w_mu, m.w_nu)) {
    if (p.g == kZero && !(p.f == kZero)) return false;
  }
  return true;
}

StepFunction radon_nikodym(const TwoMeasures& m) {
  if (!check_abs_continuity(m)) throw not_absolutely_continuous("mu is not dominated by nu");
  auto pieces = refined_pieces(m.w_mu, m.w_nu);
  std::vector<Rat> breaks;
  std::vector<ExtScalar> values;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i > 0) breaks.push_back(*pieces[i].iv.lo);
    values.push_back(pieces[i].g == kZero ? kZero
                                          : ExtScalar(pieces[i].f.finite() / pieces[i].g.finite()));
  }
  return StepFunction(m.domain, std::move(breaks), std::move(values));
}

ExtScalar l1_plus_linf_norm(const StepFunction& f, const WeightedSpace& sp) {
  auto fin = finite_part(f, sp);
  if (!fin) return ExtScalar::infinity();
  ExtScalar total = sp.total();
  if (total == kZero) return kZero;
  Rat budget = total.is_finite() ? min(total.finite(), kOne) : kOne;
  auto fstar = decreasing_rearrangement(*fin, sp);
  auto head = fstar.restrict_to(Interval(Rat(0), budget));
  return integrate(head, WeightedSpace::lebesgue(head.domain()));
}

Value lp_pow_p(const StepFunction& f, const WeightedSpace& nu, const Rat& p) {
  if (!f.all_finite()) throw error("lp_pow_p requires finite values");
  Value total{kZero};
  for (const auto& piece : refined_pieces(f, nu.density())) {
    ExtScalar mass = piece.g * piece.iv.length();
    if (mass == kZero) continue;
    Value term = Value::mul(Value::pow(Value(piece.f), p), Value(mass));
    total = Value::add(total, term);
  }
  return total;
}

Value lp_norm(const StepFunction& f, const WeightedSpace& nu, const Rat& p) {
  return Value::pow(lp_pow_p(f, nu, p), kOne / p);
}

SuperlevelSet carve_superlevel(const StepFunction& d, const WeightedSpace& sp, const Rat& budget) {
  auto groups = value_groups(d, sp);
  SuperlevelSet out;
  out.threshold = kZero;
  Rat need = budget;
  for (auto it = groups.rbegin(); it != groups.rend() && need > Rat(0); ++it) {
    out.threshold = it->value;
    // Walk this level's positive-density pieces in position order.
    for (const auto& piece : refined_pieces(d, sp.density())) {
      if (need == Rat(0)) break;
      if (!(piece.f == it->value) || piece.g == kZero) continue;
      Rat density = piece.g.finite();
      ExtScalar mass = piece.g * piece.iv.length();
      if (mass.is_finite() && mass.finite() <= need) {
        out.parts.push_back(piece.iv);
        need = need - mass.finite();
        continue;
      }
      Rat len = need / density;
      if (piece.iv.lo) {
        out.parts.push_back(Interval(*piece.iv.lo, *piece.iv.lo + len));
      } else if (piece.iv.hi) {
        out.parts.push_back(Interval(*piece.iv.hi - len, *piece.iv.hi));
      } else {
        out.parts.push_back(Interval(Rat(0), len));
      }
      need = Rat(0);
    }
  }
  if (need > Rat(0)) throw error("superlevel budget exceeds the total mass");
  out.parts = normalize_union(out.parts);
  return out;
}

EmbeddingResult embedding_constant(const TwoMeasures& m, const Rat& p) {
  if (p < kOne) throw error("embedding requires p >= 1");
  EmbeddingResult res;
  res.p = p;
  res.absolutely_continuous = check_abs_continuity(m);
  if (!res.absolutely_continuous)
    throw not_absolutely_continuous("embedding constant needs mu << nu");
  auto mu = m.mu();
  StepFunction d = radon_nikodym(m);
  ExtScalar total = mu.total();
  res.budget = total.is_finite() ? min(total.finite(), kOne) : kOne;
  res.level_threshold = kZero;
  if (p == kOne) {
    auto groups = value_groups(d, mu);
    ExtScalar sup = groups.empty() ? kZero : groups.back().value;
    res.A_pow_pprime = Value(sup);
    res.A = Value(sup);
    res.level_threshold = sup;
    res.embeds = sup.is_finite();
    return res;
  }
  res.pprime = p / (p - kOne);
  if (total == kZero) {
    res.A_pow_pprime = Value(kZero);
    res.A = Value(kZero);
    res.embeds = true;
    return res;
  }
  Rat e = *res.pprime - kOne;
  auto dstar = decreasing_rearrangement(d, mu);
  auto head = dstar.restrict_to(Interval(Rat(0), res.budget));
  Value apow{kZero};
  for (std::size_t i = 0; i < head.piece_count(); ++i) {
    apow = Value::add(apow, Value::mul(Value::pow(Value(head.value(i)), e),
                                       Value(head.piece(i).length())));
    res.level_threshold = head.value(i);
  }
  res.A_pow_pprime = apow;
  res.A = Value::pow(apow, kOne / *res.pprime);
  res.embeds = !res.A.is_inf();
  return res;
}

EmbeddingVerification verify_embedding_norm(const TwoMeasures& m, const Rat& p,
                                            const std::vector<StepFunction>& samples) {
  EmbeddingVerification ver{embedding_constant(m, p),
                            {},
                            true,
                            StepFunction::constant(m.domain, kZero),
                            Value(kZero),
                            false};
  auto mu = m.mu();
  auto nu = m.nu();
  for (const auto& f : samples) {
    SampleCheck chk;
    chk.lhs = Value(l1_plus_linf_norm(f, mu));
    chk.rhs = Value::mul(ver.result.A, lp_norm(f, nu, p));
    chk.ok = Value::le_within_error(chk.lhs, chk.rhs);
    if (!chk.ok) ver.all_samples_ok = false;
    ver.samples.push_back(chk);
  }

  // Extremal candidate: (dmu/dnu)^{p'-1} on the optimal superlevel set
  // (indicator of that set when p = 1). Irrational powers are replaced by
  // high-precision rational midpoints; the attained ratio is then computed
  // exactly from the rational candidate.
  if (mu.total() == kZero) {
    // A = 0 and the zero candidate attains it.
    ver.extremal_attains = true;
    return ver;
  }
  StepFunction d = radon_nikodym(m);
  auto level = carve_superlevel(d, mu, ver.result.budget);
  Rat e = p == kOne ? Rat(0) : (kOne / (p - kOne));
  auto powered = d.map_values([&](const ExtScalar& v) {
    if (e == Rat(0)) return ExtScalar(kOne);
    if (!v.is_finite() || v == kZero) return v;
    return ExtScalar(enclosure_midpoint(Value::pow(Value(v), e)));
  });
  ver.extremal = powered.mask(level.parts);
  Value num{l1_plus_linf_norm(ver.extremal, mu)};
  Value den = lp_norm(ver.extremal, nu, p);
  if (Value::compare(den, Value(kZero)) == Value::Cmp::Equal) {
    // The candidate has no nu-mass only when the constant itself is zero.
    ver.extremal_attains = Value::compare(ver.result.A, Value(kZero)) == Value::Cmp::Equal;
    return ver;
  }
  ver.extremal_ratio = Value::div(num, den);
  Rat one_minus{Rat(999999999) / Rat(1000000000)};
  Value floor = Value::mul(ver.result.A, Value(one_minus));
  ver.extremal_attains = Value::certainly_le(floor, ver.extremal_ratio);
  return ver;
}

CorollaryReport corollary_check(const WeightedSpace& sp, const StepFunction& v, const Rat& p) {
  if (!(p > kOne)) throw error("the corollary needs p > 1");
  if (!v.all_finite()) throw error("weight must be finite-valued");
  CorollaryReport rep;
  Rat beta = kOne / (p - kOne);  // = p' - 1
  ExtScalar total = sp.total();
  if (total == kZero) {
    rep.k_norm = Value(kZero);
    rep.finite = true;
    rep.a_pow_pprime = Value(kZero);
    rep.identity_holds = true;
    return rep;
  }
  Rat budget = total.is_finite() ? min(total.finite(), kOne) : kOne;
  // v^{-beta} rearranged decreasingly equals (v_*)^{-beta}; the infinite
  // tail of v_* past mu(R) lands at 0 automatically.
  auto vlow = increasing_rearrangement(v, sp);
  auto head = vlow.restrict_to(Interval(Rat(0), budget));
  Value knorm{kZero};
  for (std::size_t i = 0; i < head.piece_count(); ++i) {
    knorm = Value::add(knorm, Value::mul(Value::pow(Value(head.value(i)), -beta),
                                         Value(head.piece(i).length())));
  }
  rep.k_norm = knorm;
  rep.finite = !knorm.is_inf();
  TwoMeasures m(sp.domain(), sp.density(), StepFunction::multiply(sp.density(), v));
  rep.a_pow_pprime = embedding_constant(m, p).A_pow_pprime;
  rep.identity_holds = Value::eq_within_error(rep.a_pow_pprime, rep.k_norm);
  return rep;
}

}  // namespace rihull
