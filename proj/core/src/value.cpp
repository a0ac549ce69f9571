#include "rihull/value.hpp"

#include <limits>

#include "rihull/errors.hpp"

namespace rihull {

PrecInterval Value::widen() const {
  if (!is_exact()) return enclosure();
  return PrecInterval::from_rat(exact().finite());
}

Value Value::add(const Value& a, const Value& b) {
  if (a.is_exact() && b.is_exact()) return Value(a.exact() + b.exact());
  if (a.is_inf() || b.is_inf()) return Value(ExtScalar::infinity());
  return Value(PrecInterval::add(a.widen(), b.widen()));
}

Value Value::sub(const Value& a, const Value& b) {
  if (a.is_exact() && b.is_exact()) return Value(a.exact() - b.exact());
  if (b.is_inf()) throw error("subtraction of infinity is undefined");
  if (a.is_inf()) return Value(ExtScalar::infinity());
  return Value(PrecInterval::sub(a.widen(), b.widen()));
}

Value Value::mul(const Value& a, const Value& b) {
  if (a.is_exact() && b.is_exact()) return Value(a.exact() * b.exact());
  if (a.is_exact() && a.exact().is_zero()) return Value(Rat(0));
  if (b.is_exact() && b.exact().is_zero()) return Value(Rat(0));
  if (a.is_inf() || b.is_inf()) {
    const PrecInterval& fin = a.is_inf() ? b.enclosure() : a.enclosure();
    if (fin.lo.sgn() < 0) throw error("negative multiple of infinity");
    return Value(ExtScalar::infinity());
  }
  return Value(PrecInterval::mul(a.widen(), b.widen()));
}

Value Value::div(const Value& a, const Value& b) {
  if (b.is_inf()) throw error("division by infinity");
  if (a.is_exact() && b.is_exact()) {
    if (a.is_inf()) return Value(ExtScalar::infinity());
    return Value(a.exact().finite() / b.exact().finite());
  }
  if (a.is_inf()) return Value(ExtScalar::infinity());
  return Value(PrecInterval::div(a.widen(), b.widen()));
}

Value Value::pow(const Value& a, const Rat& e) {
  if (e.is_zero()) return Value(Rat(1));
  if (a.is_exact()) {
    const ExtScalar& x = a.exact();
    if (x.is_inf()) return e.sgn() > 0 ? Value(ExtScalar::infinity()) : Value(Rat(0));
    if (x.is_zero()) return e.sgn() > 0 ? Value(Rat(0)) : Value(ExtScalar::infinity());
    if (e.is_integer()) {
      if (!e.num().fits_slong_p()) throw error("power exponent out of range");
      return Value(x.finite().pow_int(e.num().get_si()));
    }
    if (!e.num().fits_slong_p() || !e.den().fits_ulong_p())
      throw error("power exponent out of range");
    const Rat powered = x.finite().pow_int(e.num().get_si());
    if (auto root = try_exact_root(powered, e.den().get_ui())) return Value(*root);
    return Value(PrecInterval::pow_rat(PrecInterval::from_rat(x.finite()), e));
  }
  return Value(PrecInterval::pow_rat(a.enclosure(), e));
}

Value::Cmp Value::compare(const Value& a, const Value& b) {
  if (a.is_exact() && b.is_exact()) {
    const auto c = a.exact() <=> b.exact();
    if (c < 0) return Cmp::Less;
    if (c > 0) return Cmp::Greater;
    return Cmp::Equal;
  }
  if (a.is_inf()) return Cmp::Greater;
  if (b.is_inf()) return Cmp::Less;
  if (a.is_exact()) {
    const Rat& q = a.exact().finite();
    if (b.enclosure().lo.cmp(q) > 0) return Cmp::Less;
    if (b.enclosure().hi.cmp(q) < 0) return Cmp::Greater;
    return Cmp::Overlap;
  }
  if (b.is_exact()) {
    const Rat& q = b.exact().finite();
    if (a.enclosure().hi.cmp(q) < 0) return Cmp::Less;
    if (a.enclosure().lo.cmp(q) > 0) return Cmp::Greater;
    return Cmp::Overlap;
  }
  if (a.enclosure().hi.cmp(b.enclosure().lo) < 0) return Cmp::Less;
  if (a.enclosure().lo.cmp(b.enclosure().hi) > 0) return Cmp::Greater;
  return Cmp::Overlap;
}

bool Value::certainly_le(const Value& a, const Value& b) {
  const Cmp c = compare(a, b);
  if (c == Cmp::Less || c == Cmp::Equal) return true;
  if (c != Cmp::Overlap) return false;
  // Overlapping enclosures are certain only when a.hi <= b.lo.
  if (a.is_exact() || b.is_exact()) {
    // exact vs enclosure overlap: the exact point lies inside the enclosure
    if (a.is_exact()) return b.enclosure().lo.cmp(a.exact().finite()) >= 0;
    return a.enclosure().hi.cmp(b.exact().finite()) <= 0;
  }
  return a.enclosure().hi.cmp(b.enclosure().lo) <= 0;
}

bool Value::certainly_lt(const Value& a, const Value& b) {
  return compare(a, b) == Cmp::Less;
}

bool Value::le_within_error(const Value& a, const Value& b) {
  return compare(a, b) != Cmp::Greater;
}

bool Value::eq_within_error(const Value& a, const Value& b) {
  const Cmp c = compare(a, b);
  return c == Cmp::Equal || c == Cmp::Overlap;
}

double Value::to_double() const {
  if (is_exact()) return exact().to_double();
  return enclosure().mid_double();
}

std::string Value::str() const {
  if (is_exact()) return exact().str();
  return "[" + enclosure().lo.str() + ", " + enclosure().hi.str() + "]";
}

std::optional<Rat> try_exact_root(const Rat& x, unsigned long k) {
  if (k == 1) return x;
  if (x.sgn() < 0) return std::nullopt;
  mpz_class rn, rd;
  const int exact_n = mpz_root(rn.get_mpz_t(), x.num().get_mpz_t(), k);
  if (!exact_n) return std::nullopt;
  const int exact_d = mpz_root(rd.get_mpz_t(), x.den().get_mpz_t(), k);
  if (!exact_d) return std::nullopt;
  mpq_class q(rn, rd);
  q.canonicalize();
  return Rat(std::move(q));
}

int cmp_rational_vs_pow(const Rat& q, const Rat& base, const Rat& expo) {
  if (q.sgn() <= 0 || base.sgn() <= 0) throw error("power comparison needs positive operands");
  if (!expo.num().fits_slong_p() || !expo.den().fits_slong_p())
    throw error("power exponent out of range");
  // q vs base^(n/d)  <=>  q^d vs base^n (d > 0).
  const Rat lhs = q.pow_int(expo.den().get_si());
  const Rat rhs = base.pow_int(expo.num().get_si());
  if (lhs < rhs) return -1;
  if (lhs == rhs) return 0;
  return 1;
}

}  // namespace rihull
