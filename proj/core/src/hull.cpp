#include "rihull/hull.hpp"

#include <utility>

#include "rihull/embedding.hpp"
#include "rihull/errors.hpp"
#include "rihull/mpt.hpp"
#include "rihull/rearrangement.hpp"

namespace rihull {

namespace {

const Rat kZero{0};
const Rat kOne{1};
const ExtScalar kZeroE{kZero};

// Extends a profile on (0, m) to (0, inf) by zero.
StepFunction extend_to_halfline(const StepFunction& g) {
  if (!g.domain().lo || !(*g.domain().lo == kZero))
    throw domain_mismatch("half-line profile must start at 0");
  if (!g.domain().hi) return g;
  std::vector<Rat> breaks;
  std::vector<ExtScalar> values;
  for (std::size_t i = 0; i < g.piece_count(); ++i) {
    if (i > 0) breaks.push_back(*g.piece(i).lo);
    values.push_back(g.value(i));
  }
  breaks.push_back(*g.domain().hi);
  values.push_back(kZeroE);
  return StepFunction(Interval(kZero, std::nullopt), std::move(breaks), std::move(values));
}

// Positive mass beyond `window` under the zero-extended profile?
void require_support_within(const StepFunction& g_ext, const ExtScalar& window) {
  if (!window.is_finite()) return;
  for (std::size_t i = 0; i < g_ext.piece_count(); ++i) {
    if (g_ext.value(i) == kZeroE) continue;
    const Interval& iv = g_ext.piece(i);
    if (!iv.hi || *iv.hi > window.finite())
      throw domain_mismatch("profile carries mass beyond the constructible window");
  }
}

bool check_equimeasurable(const StepFunction& f, const WeightedSpace& sp,
                          const StepFunction& g_ext) {
  auto halfline = WeightedSpace::lebesgue(Interval(kZero, std::nullopt));
  return distribution(f, sp) == distribution(g_ext, halfline);
}

WitnessReport finish_report(StepFunction f, const HullInstance& inst, const StepFunction& g_ext,
                            const Rat& epsilon, HullCase tag) {
  WitnessReport rep{std::move(f), false, Value(kZero), Value(kZero), Value(kZero),
                    Value(kZero),  epsilon, tag,          false};
  rep.equimeasurable_with_g = check_equimeasurable(rep.f, inst.space, g_ext);
  rep.lambda_pow_p = halfline_lambda_pow_p(g_ext, inst.v_low, inst.p);
  rep.lp_pow_p = weighted_lp_pow_p(rep.f, inst.space, inst.v, inst.p);
  rep.lambda_norm = Value::pow(rep.lambda_pow_p, kOne / inst.p);
  rep.lp_norm = Value::pow(rep.lp_pow_p, kOne / inst.p);
  Value cap = Value::mul(Value::pow(Value(kOne + epsilon), inst.p), rep.lambda_pow_p);
  rep.sandwich_holds = Value::le_within_error(rep.lambda_pow_p, rep.lp_pow_p) &&
                       Value::le_within_error(rep.lp_pow_p, cap);
  return rep;
}

}  // namespace

std::string to_string(HullCase c) {
  switch (c) {
    case HullCase::KappaInfinite: return "kappa_infinite";
    case HullCase::FiniteS: return "finite_s";
    case HullCase::InfiniteS: return "infinite_s";
    case HullCase::EpsilonZero: return "epsilon_zero";
    case HullCase::VstarZero: return "vstar_zero";
  }
  return "unknown";
}

HullInstance::HullInstance(WeightedSpace sp, StepFunction weight, Rat exponent)
    : space(std::move(sp)),
      v(std::move(weight)),
      p(std::move(exponent)),
      v_low(increasing_rearrangement(v, space)),
      T(kZeroE),
      S(kZeroE),
      kappa_S(kZeroE) {
  if (!(p > kZero)) throw error("exponent must be positive");
  if (!v.all_finite()) throw error("weight must be finite-valued");
  if (!(v.domain().lo == space.domain().lo && v.domain().hi == space.domain().hi))
    throw domain_mismatch("weight must live on the space domain");
  auto groups = value_groups(v, space);
  if (groups.empty()) return;
  T = groups.back().value;
  vstar_zero = groups.front().value == kZeroE && !groups.front().mass.is_finite();
  if (vstar_zero) return;
  // S = value of the first infinite-mass group, else T; the mass strictly
  // below S is a finite sum either way.
  S = T;
  ExtScalar below{kZero};
  for (const auto& g : groups) {
    if (!g.mass.is_finite()) {
      S = g.value;
      break;
    }
  }
  for (const auto& g : groups) {
    if (g.value < S) below = below + g.mass;
  }
  kappa_S = below;
}

Value halfline_lambda_pow_p(const StepFunction& g_star, const StepFunction& w, const Rat& p) {
  auto g_ext = extend_to_halfline(g_star);
  Value total{kZero};
  for (const auto& piece : refined_pieces(g_ext, w)) {
    if (piece.f == kZeroE) continue;  // 0 * inf tail stays 0
    Value term = Value::mul(Value::pow(Value(piece.f), p), Value(piece.g * piece.iv.length()));
    total = Value::add(total, term);
  }
  return total;
}

Value weighted_lp_pow_p(const StepFunction& f, const WeightedSpace& sp, const StepFunction& v,
                        const Rat& p) {
  return lp_pow_p(f, WeightedSpace(StepFunction::multiply(sp.density(), v)), p);
}

Value weighted_lp_norm(const StepFunction& f, const WeightedSpace& sp, const StepFunction& v,
                       const Rat& p) {
  return Value::pow(weighted_lp_pow_p(f, sp, v, p), kOne / p);
}

InequalityReport hull_lower_bound(const StepFunction& f, const HullInstance& inst) {
  if (!inst.p.is_integer()) throw error("exact lower bound requires an integer exponent");
  long p = inst.p.num().get_si();
  InequalityReport rep;
  StepFunction fp = f.pow_int(p);
  rep.rhs = integrate(StepFunction::multiply(fp, inst.v), inst.space);
  if (inst.space.total() == kZeroE) {
    rep.lhs = kZeroE;
  } else {
    auto fstar = decreasing_rearrangement(f, inst.space);
    StepFunction fstar_p = extend_to_halfline(fstar.pow_int(p));
    ExtScalar lhs{kZero};
    for (const auto& piece : refined_pieces(fstar_p, inst.v_low)) {
      lhs = lhs + piece.f * piece.g * piece.iv.length();
    }
    rep.lhs = lhs;
  }
  rep.holds = rep.lhs <= rep.rhs;
  // The same bound through the reverse inequality applied to (f^p, v).
  auto cross = reverse_hardy_littlewood(f.pow_int(p), inst.v, inst.space);
  if (!(cross.rhs == rep.lhs) || !(cross.lhs == rep.rhs)) rep.holds = false;
  rep.slack = rep.lhs.is_finite() && rep.rhs.is_finite()
                  ? ExtScalar(rep.rhs.finite() - rep.lhs.finite())
                  : (rep.lhs == rep.rhs ? kZeroE : ExtScalar::infinity());
  return rep;
}

WitnessReport hull_witness(const StepFunction& g_star, const HullInstance& inst,
                           const Rat& epsilon) {
  if (inst.vstar_zero)
    throw vstar_is_zero("the weight vanishes on an infinite-mass set; use the degenerate route");
  if (epsilon < kZero) throw error("epsilon must be nonnegative");
  if (!g_star.all_finite() || !g_star.is_nonincreasing())
    throw error("the profile must be a finite nonincreasing rearrangement");
  if (inst.T == kZeroE)
    throw error("the weight vanishes a.e.; no hull witness on a finite-mass zero set");
  auto g_ext = extend_to_halfline(g_star);

  if (epsilon == kZero) {
    auto verdict = ryff_conditions(inst.v, inst.space);
    if (verdict.tag == RyffCase::Neither)
      throw epsilon_zero_not_available(
          "no value-ordered transform exists for the weight; level " + verdict.witness->str() +
          " has infinite lower distribution and positive mass");
    require_support_within(g_ext, inst.space.total());
    auto sigma = build_increasing_mpt(inst.v, inst.space);
    return finish_report(compose_with_rearrangement(g_ext, sigma), inst, g_ext, epsilon,
                         HullCase::EpsilonZero);
  }

  Rat s = inst.S.finite();
  struct Band {
    Interval iv;
    Rat density;
  };
  std::vector<Interval> r1, r2;
  std::vector<Band> open_bands;
  for (const auto& piece : refined_pieces(inst.v, inst.space.density())) {
    if (piece.g == kZeroE) continue;  // null carrier
    if (piece.f < inst.S) {
      r1.push_back(piece.iv);
    } else if (piece.f.is_finite() &&
               cmp_rational_vs_pow(piece.f.finite() / s, kOne + epsilon, inst.p) < 0) {
      if (piece.iv.is_bounded()) {
        r2.push_back(piece.iv);
      } else if (!piece.iv.lo && !piece.iv.hi) {
        // A two-sided band is not layable as one source run; split it so
        // the multi-band clipping below applies.
        open_bands.push_back(Band{Interval::below(kZero), piece.g.finite()});
        open_bands.push_back(Band{Interval::above(kZero), piece.g.finite()});
      } else {
        open_bands.push_back(Band{piece.iv, piece.g.finite()});
      }
    }
  }
  r1 = normalize_union(r1);

  if (!inst.kappa_S.is_finite()) {
    // Unreachable for finite-valued step weights: the mass strictly below S
    // is a finite sum of finite group masses. Kept as a guard.
    auto space1 = WeightedSpace(inst.space.restricted(r1));
    auto sigma1 = build_increasing_mpt(inst.v.mask(r1), space1);
    return finish_report(compose_with_rearrangement(g_ext, sigma1), inst, g_ext, epsilon,
                         HullCase::KappaInfinite);
  }

  Rat kappa = inst.kappa_S.finite();

  // At most one infinite-mass source is representable with finitely many
  // affine legs. A second unbounded band is only needed up to the profile's
  // support, so clip it to that much mass (the sandwich legs survive any
  // shrinking of the band: the upper one bounds v on a subset, the lower one
  // is the rearrangement inequality for whatever stays equimeasurable).
  if (open_bands.size() > 1) {
    std::optional<Rat> support_end = Rat(0);
    for (std::size_t i = 0; i < g_ext.piece_count(); ++i) {
      if (g_ext.value(i) == kZeroE) continue;
      const auto& hi = g_ext.piece(i).hi;
      if (!hi) {
        support_end = std::nullopt;
        break;
      }
      *support_end = max(*support_end, *hi);
    }
    if (!support_end) {
      for (const auto& b : open_bands)
        if (!b.iv.hi) r2.push_back(b.iv);  // keep the right-going band only
    } else {
      Rat need = *support_end - kappa;
      if (need > kZero)
        for (const auto& b : open_bands) {
          Rat len = need / b.density;
          r2.push_back(b.iv.lo ? Interval(*b.iv.lo, *b.iv.lo + len)
                               : Interval(*b.iv.hi - len, *b.iv.hi));
        }
    }
  } else {
    for (const auto& b : open_bands) r2.push_back(b.iv);
  }
  r2 = normalize_union(r2);
  ExtScalar window = inst.kappa_S + inst.space.measure(r2);
  require_support_within(g_ext, window);

  MPTransform sigma{inst.space.domain(), {}};
  if (!r1.empty()) {
    auto space1 = WeightedSpace(inst.space.restricted(r1));
    if (!(space1.total() == kZeroE)) {
      auto sigma1 = build_increasing_mpt(inst.v.mask(r1), space1);
      sigma.pieces = sigma1.pieces;
    }
  }
  auto sigma2 = build_onto_halfline(r2, inst.space, kappa);
  for (const auto& piece : sigma2.pieces) sigma.pieces.push_back(piece);

  return finish_report(compose_with_rearrangement(g_ext, sigma), inst, g_ext, epsilon,
                       HullCase::FiniteS);
}

WitnessReport hull_witness_degenerate(const StepFunction& g_star, const HullInstance& inst,
                                      const Rat& epsilon) {
  if (!inst.vstar_zero)
    throw vstar_not_zero("the zero set has finite mass; use the main construction");
  if (!g_star.all_finite()) throw error("the profile must be finite-valued");
  auto g_ext = extend_to_halfline(g_star);
  // Zero-value positive-density pieces; all bounded ones plus the first
  // unbounded one (one suffices for infinite mass and keeps the layout
  // representable).
  std::vector<Interval> parts;
  bool have_unbounded = false;
  for (const auto& piece : refined_pieces(inst.v, inst.space.density())) {
    if (!(piece.f == kZeroE) || piece.g == kZeroE) continue;
    if (piece.iv.is_bounded()) {
      parts.push_back(piece.iv);
    } else if (!have_unbounded) {
      // A two-sided part is not layable as one source run; half of it
      // already carries infinite mass.
      parts.push_back(!piece.iv.lo && !piece.iv.hi ? Interval::above(kZero) : piece.iv);
      have_unbounded = true;
    }
  }
  auto sigma = build_onto_halfline(parts, inst.space, kZero);
  auto rep = finish_report(compose_with_rearrangement(g_ext, sigma), inst, g_ext, epsilon,
                           HullCase::VstarZero);
  // Norm <= epsilon; here exactly 0 by construction.
  rep.sandwich_holds =
      Value::le_within_error(rep.lp_pow_p, Value::pow(Value(epsilon), inst.p));
  return rep;
}

WitnessReport hull_witness_powertail(const StepFunction& g_star, const PowerTail& v, const Rat& p,
                                     const Rat& epsilon) {
  if (!(epsilon > kZero)) throw error("the power-tail route needs epsilon > 0");
  if (!g_star.all_finite() || !g_star.is_nonincreasing())
    throw error("the profile must be a finite nonincreasing rearrangement");
  const Monomial& tail = v.pieces().back();
  if (!(tail.coeff > kZero) || !(tail.exponent < kZero))
    throw vstar_not_zero("the weight does not decay at infinity");
  for (const auto& m : v.pieces())
    if (!(m.coeff > kZero)) throw error("the power-tail route needs a strictly positive weight");

  // Place the k-th profile piece where the weight is certified below
  // epsilon^p 2^{-(k+1)} / (value^p * length).
  struct Placed {
    Interval iv;
    ExtScalar value;
  };
  std::vector<Placed> placed;
  Rat cursor = tail.iv.lo ? max(*tail.iv.lo, kOne) : kOne;
  Value eps_pow = Value::pow(Value(epsilon), p);
  // Sup of the weight on (t, inf): the tail decays, so it is the right limit
  // at t (value_at would see 0 at the piece boundary itself).
  auto tail_sup = [&](const Rat& t) {
    return Value::mul(Value(tail.coeff), Value::pow(Value(t / tail.scale), tail.exponent));
  };
  std::size_t k = 0;
  for (std::size_t i = 0; i < g_star.piece_count(); ++i) {
    const ExtScalar& gv = g_star.value(i);
    if (gv == kZeroE) continue;
    const Interval& gi = g_star.piece(i);
    if (!gi.is_bounded())
      throw unbounded_support_piece("a positive profile piece of infinite length");
    Rat len = *gi.hi - *gi.lo;
    Value budget = Value::mul(eps_pow, Value(Rat(1, 2).pow_int(static_cast<long>(k) + 1)));
    Value threshold = Value::div(budget, Value::mul(Value::pow(Value(gv), p), Value(len)));
    while (!Value::certainly_lt(tail_sup(cursor), threshold)) cursor = cursor + cursor;
    placed.push_back(Placed{Interval(cursor, cursor + len), gv});
    cursor = cursor + len;
    ++k;
  }

  Interval halfline(kZero, std::nullopt);
  std::vector<Rat> breaks;
  std::vector<ExtScalar> values;
  for (const auto& pl : placed) {
    // Adjacent placements leave no zero gap; cursor >= 1 > 0 covers the head.
    if (breaks.empty() || *pl.iv.lo > breaks.back()) {
      breaks.push_back(*pl.iv.lo);
      values.push_back(kZeroE);
    }
    breaks.push_back(*pl.iv.hi);
    values.push_back(pl.value);
  }
  values.push_back(kZeroE);
  StepFunction f(halfline, std::move(breaks), std::move(values));

  WitnessReport rep{f,          false, Value(kZero), Value(kZero), Value(kZero),
                    Value(kZero), epsilon, HullCase::VstarZero, false};
  auto g_ext = extend_to_halfline(g_star);
  auto leb = WeightedSpace::lebesgue(halfline);
  rep.equimeasurable_with_g = distribution(f, leb) == distribution(g_ext, leb);
  Value lp{kZero};
  for (const auto& pl : placed) {
    Value term = Value::mul(Value::pow(Value(pl.value), p), powertail_integral(v, pl.iv));
    lp = Value::add(lp, term);
  }
  rep.lp_pow_p = lp;
  rep.lp_norm = Value::pow(lp, kOne / p);
  rep.sandwich_holds = Value::certainly_le(lp, eps_pow);
  return rep;
}

HullCampaignReport ri_hull_verify(const HullInstance& inst,
                                  const std::vector<StepFunction>& sample_gs,
                                  const std::vector<Rat>& epsilons) {
  HullCampaignReport rep;
  for (std::size_t i = 0; i < sample_gs.size(); ++i) {
    const auto& g = sample_gs[i];
    ++rep.cases;
    auto lower = hull_lower_bound(g, inst);
    if (!lower.holds) {
      ++rep.failures;
      rep.notes.push_back("lower bound failed on sample " + std::to_string(i));
      continue;
    }
    if (inst.space.total() == ExtScalar(kZero)) continue;
    auto g_star = decreasing_rearrangement(g, inst.space);
    for (const auto& eps : epsilons) {
      ++rep.cases;
      try {
        auto wit = inst.vstar_zero ? hull_witness_degenerate(g_star, inst, eps)
                                   : hull_witness(g_star, inst, eps);
        if (!wit.equimeasurable_with_g || !wit.sandwich_holds) {
          ++rep.failures;
          rep.notes.push_back("witness failed on sample " + std::to_string(i) + " eps " +
                              eps.str());
        }
      } catch (const epsilon_zero_not_available&) {
        // eps = 0 legitimately unavailable for this weight; not a failure.
      }
    }
  }
  return rep;
}

}  // namespace rihull
