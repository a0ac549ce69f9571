#include "rihull/bp.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "rihull/embedding.hpp"
#include "rihull/errors.hpp"
#include "rihull/hull.hpp"
#include "rihull/rearrangement.hpp"

namespace rihull {

namespace {

const Rat kZero{0};
const Rat kOne{1};

Value ratio(const PowerTail& w, const Rat& p, const Rat& r, const Value& l_at_r) {
  Value weight_head = powertail_integral(w, Interval(kZero, r));
  if (Value::compare(weight_head, Value(kZero)) == Value::Cmp::Equal)
    return Value(ExtScalar::infinity());
  return Value::div(Value::mul(l_at_r, Value::pow(Value(r), p)), weight_head);
}

double upper_double(const Value& v) {
  if (v.is_inf()) return std::numeric_limits<double>::infinity();
  return v.widen().hi.to_double();
}

double lower_double(const Value& v) {
  if (v.is_inf()) return std::numeric_limits<double>::infinity();
  return v.widen().lo.to_double();
}

// Hull of finitely many certified values: lower end = best lower bound seen,
// upper end = worst upper bound that must be dominated.
Value hull_of(const std::vector<Value>& lowers, const std::vector<Value>& uppers) {
  PrecInterval acc = lowers.front().widen();
  for (const auto& v : lowers) {
    PrecInterval w = v.widen();
    if (w.lo.cmp(acc.lo) > 0) acc.lo = w.lo;
  }
  acc.hi = acc.lo;
  for (const auto& v : uppers) {
    PrecInterval w = v.widen();
    if (w.hi.cmp(acc.hi) > 0) acc.hi = w.hi;
  }
  return Value(acc);
}

}  // namespace

Value bp_ratio_at(const PowerTail& w, const Rat& p, const Rat& r) {
  if (!(r > kZero)) throw error("ratio points must be positive");
  Value tail = powertail_integral_shifted(w, -p, Interval(r, std::nullopt));
  return ratio(w, p, r, tail);
}

BpReport bp_check(const PowerTail& w, const Rat& p) {
  if (!(p > kZero)) throw error("the class is defined for positive exponents");
  const auto& pieces = w.pieces();
  const Monomial& first = pieces.front();
  const Monomial& last = pieces.back();
  BpReport rep;
  rep.near0_exponent = first.exponent;
  rep.tail_exponent = last.exponent;
  rep.critical = p - kOne;
  if (first.coeff > kZero && !(first.exponent > Rat(-1)))
    throw non_integrable_weight("weight is not integrable near 0");

  if (w.is_zero()) {
    rep.in_class = true;
    rep.constant = Value(kZero);
    rep.exact_constant = true;
    return rep;
  }
  bool first_ok = first.coeff > kZero && first.exponent < rep.critical;
  bool tail_ok = last.coeff == kZero || last.exponent < rep.critical;
  rep.in_class = first_ok && tail_ok;
  if (!rep.in_class) {
    rep.constant = Value(ExtScalar::infinity());
    return rep;
  }

  auto regime_limit = [&](const Rat& beta) { return (beta + kOne) / (rep.critical - beta); };

  if (pieces.size() == 1) {
    // Pure monomial: the ratio is constant in r.
    rep.constant = Value(regime_limit(first.exponent));
    rep.exact_constant = true;
    rep.checked_grid.push_back(kOne);
    return rep;
  }

  // The ratio on the first regime is c + c' r^{p-1-b0} and on the last a
  // Moebius function of r^{b+1}; both take their supremum at a regime
  // endpoint or limit. Interior regimes get certified bisection bounds
  // ratio <= L(x) y^p / W(x) on [x, y].
  std::vector<Rat> cuts;
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) cuts.push_back(*pieces[i].iv.hi);
  std::vector<Value> lowers, uppers;
  auto note = [&](const Rat& r, const Value& q) {
    rep.checked_grid.push_back(r);
    lowers.push_back(q);
    uppers.push_back(q);
  };
  lowers.push_back(Value(regime_limit(first.exponent)));
  uppers.push_back(Value(regime_limit(first.exponent)));
  for (const auto& r : cuts) note(r, bp_ratio_at(w, p, r));
  if (last.coeff > kZero && last.exponent + kOne > kZero) {
    lowers.push_back(Value(regime_limit(last.exponent)));
    uppers.push_back(Value(regime_limit(last.exponent)));
  }

  double best_lb = 0;
  for (const auto& v : lowers) best_lb = std::max(best_lb, lower_double(v));

  struct Segment {
    Rat x, y;
    int depth;
  };
  std::deque<Segment> todo;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) todo.push_back({cuts[i], cuts[i + 1], 0});
  while (!todo.empty()) {
    Segment seg = todo.front();
    todo.pop_front();
    Value l_at_x = powertail_integral_shifted(w, -p, Interval(seg.x, std::nullopt));
    Value bound = ratio(w, p, seg.y, l_at_x);
    if (upper_double(bound) <= best_lb * (1 + 1e-9) || seg.depth >= 24) {
      uppers.push_back(bound);
      continue;
    }
    Rat mid = (seg.x + seg.y) / Rat(2);
    Value q_mid = bp_ratio_at(w, p, mid);
    best_lb = std::max(best_lb, lower_double(q_mid));
    note(mid, q_mid);
    todo.push_back({seg.x, mid, seg.depth + 1});
    todo.push_back({mid, seg.y, seg.depth + 1});
  }

  rep.constant = hull_of(lowers, uppers);
  return rep;
}

PowerTail power_weight_rearrangement(const Rat& alpha) {
  if (alpha < kZero) throw error("the power example needs a nonnegative exponent");
  return PowerTail({Monomial{Interval(kZero, std::nullopt), kOne, Rat(2), alpha}});
}

LorentzIdentityReport classical_lorentz_identity_check(const StepFunction& g_star,
                                                       const Rat& alpha, const Rat& p) {
  if (alpha < kZero || !(alpha < p - kOne)) throw error("needs 0 <= alpha < p - 1");
  LorentzIdentityReport rep;
  rep.q = p / (alpha + kOne);
  rep.exponent_identity = (p / rep.q - kOne == alpha);
  rep.lambda_pow_plain = step_power_against_powertail(g_star, p, PowerTail::monomial(kOne, alpha));
  Value via_lorentz = step_power_against_powertail(
      g_star, p, PowerTail({Monomial{Interval(kZero, std::nullopt), kOne, kOne, p / rep.q - kOne}}));
  rep.integrand_match = Value::eq_within_error(rep.lambda_pow_plain, via_lorentz);
  rep.lambda_pow_scaled = step_power_against_powertail(g_star, p, power_weight_rearrangement(alpha));
  Value expected = Value::mul(Value::pow(Value(Rat(2)), -alpha), rep.lambda_pow_plain);
  rep.scaling_match = Value::eq_within_error(rep.lambda_pow_scaled, expected);
  return rep;
}

BanachChainReport bp_implies_banach_chain_check(const WeightedSpace& sp, const StepFunction& v,
                                                const Rat& p,
                                                const std::vector<StepFunction>& samples) {
  if (!(p > kOne)) throw error("the chain needs p > 1");
  BanachChainReport rep;
  auto w_low = increasing_rearrangement(v, sp);
  if (!w_low.all_finite()) return rep;  // infinite tail: outside the class, vacuous
  rep.bp_ok = bp_check(PowerTail::from_step(w_low), p).in_class;
  if (!rep.bp_ok) return rep;
  for (const auto& f : samples) {
    ++rep.checked;
    Value lam{kZero};
    if (!(sp.total() == ExtScalar(kZero))) {
      auto fstar = decreasing_rearrangement(f, sp);
      lam = halfline_lambda_pow_p(fstar, w_low, p);
    }
    Value lp = weighted_lp_pow_p(f, sp, v, p);
    if (!Value::le_within_error(lam, lp)) rep.first_inclusion_ok = false;
    if (!lam.is_inf() && !l1_plus_linf_norm(f, sp).is_finite()) rep.second_inclusion_ok = false;
  }
  return rep;
}

}  // namespace rihull
