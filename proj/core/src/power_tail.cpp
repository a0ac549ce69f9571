#include "rihull/power_tail.hpp"

#include <utility>

#include "rihull/errors.hpp"

namespace rihull {

namespace {

const Rat kZero{0};
const Rat kOne{1};

bool is_zero_endpoint(const std::optional<Rat>& e) { return e && *e == kZero; }

}  // namespace

PowerTail::PowerTail(std::vector<Monomial> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw error("power-tail weight needs at least one piece");
  if (!is_zero_endpoint(pieces_.front().iv.lo))
    throw error("power-tail pieces must start at 0");
  if (pieces_.back().iv.hi) throw error("power-tail pieces must extend to infinity");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& m = pieces_[i];
    if (m.coeff < kZero) throw error("negative coefficient");
    if (!(m.scale > kZero)) throw error("scale must be positive");
    if (i + 1 < pieces_.size() &&
        !(m.iv.hi && pieces_[i + 1].iv.lo && *m.iv.hi == *pieces_[i + 1].iv.lo))
      throw error("power-tail pieces must tile the half-line");
  }
}

PowerTail PowerTail::monomial(const Rat& coeff, const Rat& exponent) {
  return PowerTail({Monomial{Interval(kZero, std::nullopt), coeff, kOne, exponent}});
}

PowerTail PowerTail::from_step(const StepFunction& w) {
  if (!w.all_finite()) throw error("step weight must be finite-valued");
  if (!is_zero_endpoint(w.domain().lo) || w.domain().hi)
    throw error("step weight must live on (0, inf)");
  std::vector<Monomial> pieces;
  for (std::size_t i = 0; i < w.piece_count(); ++i) {
    pieces.push_back(Monomial{w.piece(i), w.value(i).finite(), kOne, kZero});
  }
  return PowerTail(std::move(pieces));
}

bool PowerTail::is_zero() const {
  for (const auto& m : pieces_)
    if (m.coeff > kZero) return false;
  return true;
}

Value PowerTail::value_at(const Rat& t) const {
  for (const auto& m : pieces_) {
    if (m.iv.contains_point(t))
      return Value::mul(Value(m.coeff), Value::pow(Value(t / m.scale), m.exponent));
  }
  return Value(kZero);
}

Value monomial_integrate_shifted(const Monomial& m, const Rat& shift, const Interval& window) {
  auto sub = intersect(m.iv, window);
  if (!sub) return Value(kZero);
  if (m.coeff == kZero) return Value(kZero);
  if (sub->lo && *sub->lo < kZero) throw error("monomial integral outside (0, inf)");
  Rat gamma = m.exponent + shift + kOne;
  bool from_zero = is_zero_endpoint(sub->lo) || !sub->lo;
  bool to_inf = !sub->hi;

  if (gamma == kZero) {
    // Antiderivative coeff * scale^{-exponent} * log t.
    if (from_zero || to_inf) return Value(ExtScalar::infinity());
    Value ratio = Value(PrecInterval::log(PrecInterval::from_rat(*sub->hi / *sub->lo)));
    Value factor = Value::pow(Value(m.scale), -m.exponent);
    return Value::mul(Value(m.coeff), Value::mul(factor, ratio));
  }

  // Antiderivative coeff/gamma * (t/scale)^exponent * t^{shift+1}.
  if (gamma > kZero && to_inf) return Value(ExtScalar::infinity());
  if (gamma < kZero && from_zero) return Value(ExtScalar::infinity());
  auto primitive = [&](const Rat& t) {
    return Value::mul(Value::pow(Value(t / m.scale), m.exponent),
                      Value::pow(Value(t), shift + kOne));
  };
  Value upper = to_inf ? Value(kZero) : primitive(*sub->hi);    // limit at inf is 0 when gamma < 0
  Value lower = from_zero ? Value(kZero) : primitive(*sub->lo);  // limit at 0 is 0 when gamma > 0
  Value gap = gamma > kZero ? Value::sub(upper, lower) : Value::sub(lower, upper);
  Rat g_abs = gamma > kZero ? gamma : -gamma;
  return Value::mul(Value(m.coeff / g_abs), gap);
}

Value monomial_integrate(const Monomial& m, const Interval& window) {
  return monomial_integrate_shifted(m, kZero, window);
}

Value powertail_integral_shifted(const PowerTail& w, const Rat& shift, const Interval& window) {
  Value total{kZero};
  for (const auto& m : w.pieces())
    total = Value::add(total, monomial_integrate_shifted(m, shift, window));
  return total;
}

Value powertail_integral(const PowerTail& w, const Interval& window) {
  return powertail_integral_shifted(w, kZero, window);
}

Value step_power_against_powertail(const StepFunction& g, const Rat& p, const PowerTail& w) {
  if (!g.all_finite()) throw error("profile must be finite-valued");
  Value total{kZero};
  for (std::size_t i = 0; i < g.piece_count(); ++i) {
    if (g.value(i) == ExtScalar(kZero)) continue;
    Value coeff = Value::pow(Value(g.value(i)), p);
    total = Value::add(total, Value::mul(coeff, powertail_integral(w, g.piece(i))));
  }
  return total;
}

}  // namespace rihull
