#include "rihull/big_float.hpp"

#include <cmath>

#include "rihull/errors.hpp"

namespace rihull {

BigFloat::BigFloat() { mpfr_init2(x_, kPrec); mpfr_set_zero(x_, 1); }

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(x_, kPrec);
  mpfr_set(x_, o.x_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(x_, kPrec);
  mpfr_swap(x_, o.x_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) mpfr_set(x_, o.x_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(x_, o.x_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(x_); }

BigFloat BigFloat::from_rat(const Rat& q, mpfr_rnd_t rnd) {
  BigFloat r;
  mpfr_set_q(r.x_, q.raw().get_mpq_t(), rnd);
  return r;
}

BigFloat BigFloat::from_long(long n) {
  BigFloat r;
  mpfr_set_si(r.x_, n, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::add(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat r;
  mpfr_add(r.x_, a.x_, b.x_, rnd);
  return r;
}

BigFloat BigFloat::sub(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat r;
  mpfr_sub(r.x_, a.x_, b.x_, rnd);
  return r;
}

BigFloat BigFloat::mul(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat r;
  mpfr_mul(r.x_, a.x_, b.x_, rnd);
  return r;
}

BigFloat BigFloat::div(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  if (b.sgn() == 0) throw error("big-float division by zero");
  BigFloat r;
  mpfr_div(r.x_, a.x_, b.x_, rnd);
  return r;
}

BigFloat BigFloat::pow_int(const BigFloat& a, long k, mpfr_rnd_t rnd) {
  BigFloat r;
  mpfr_pow_si(r.x_, a.x_, k, rnd);
  return r;
}

BigFloat BigFloat::root(const BigFloat& a, unsigned long k, mpfr_rnd_t rnd) {
  if (a.sgn() < 0) throw error("root of a negative big-float");
  BigFloat r;
#if MPFR_VERSION_MAJOR >= 4
  mpfr_rootn_ui(r.x_, a.x_, k, rnd);
#else
  mpfr_root(r.x_, a.x_, k, rnd);
#endif
  return r;
}

BigFloat BigFloat::log(const BigFloat& a, mpfr_rnd_t rnd) {
  if (a.sgn() <= 0) throw error("log of a non-positive big-float");
  BigFloat r;
  mpfr_log(r.x_, a.x_, rnd);
  return r;
}

std::string BigFloat::str() const {
  char buf[128];
  mpfr_snprintf(buf, sizeof buf, "%.40Re", x_);
  return std::string(buf);
}

PrecInterval PrecInterval::from_rat(const Rat& q) {
  return PrecInterval{BigFloat::from_rat(q, MPFR_RNDD), BigFloat::from_rat(q, MPFR_RNDU)};
}

PrecInterval PrecInterval::add(const PrecInterval& a, const PrecInterval& b) {
  return PrecInterval{BigFloat::add(a.lo, b.lo, MPFR_RNDD), BigFloat::add(a.hi, b.hi, MPFR_RNDU)};
}

PrecInterval PrecInterval::sub(const PrecInterval& a, const PrecInterval& b) {
  return PrecInterval{BigFloat::sub(a.lo, b.hi, MPFR_RNDD), BigFloat::sub(a.hi, b.lo, MPFR_RNDU)};
}

PrecInterval PrecInterval::mul(const PrecInterval& a, const PrecInterval& b) {
  const BigFloat* as[2] = {&a.lo, &a.hi};
  const BigFloat* bs[2] = {&b.lo, &b.hi};
  BigFloat lo, hi;
  bool first = true;
  for (const BigFloat* x : as) {
    for (const BigFloat* y : bs) {
      BigFloat d = BigFloat::mul(*x, *y, MPFR_RNDD);
      BigFloat u = BigFloat::mul(*x, *y, MPFR_RNDU);
      if (first || d.cmp(lo) < 0) lo = d;
      if (first || u.cmp(hi) > 0) hi = u;
      first = false;
    }
  }
  return PrecInterval{std::move(lo), std::move(hi)};
}

PrecInterval PrecInterval::div(const PrecInterval& a, const PrecInterval& b) {
  if (b.lo.sgn() <= 0 && b.hi.sgn() >= 0) throw error("interval division through zero");
  const BigFloat* as[2] = {&a.lo, &a.hi};
  const BigFloat* bs[2] = {&b.lo, &b.hi};
  BigFloat lo, hi;
  bool first = true;
  for (const BigFloat* x : as) {
    for (const BigFloat* y : bs) {
      BigFloat d = BigFloat::div(*x, *y, MPFR_RNDD);
      BigFloat u = BigFloat::div(*x, *y, MPFR_RNDU);
      if (first || d.cmp(lo) < 0) lo = d;
      if (first || u.cmp(hi) > 0) hi = u;
      first = false;
    }
  }
  return PrecInterval{std::move(lo), std::move(hi)};
}

PrecInterval PrecInterval::pow_rat(const PrecInterval& a, const Rat& e) {
  if (a.lo.sgn() <= 0) throw error("interval power needs a positive base");
  if (!e.num().fits_slong_p() || !e.den().fits_ulong_p())
    throw error("power exponent out of range");
  const long n = e.num().get_si();
  const unsigned long d = e.den().get_ui();
  // t^(n/d) is monotone increasing in t for n > 0, decreasing for n < 0.
  const BigFloat& base_lo = n >= 0 ? a.lo : a.hi;
  const BigFloat& base_hi = n >= 0 ? a.hi : a.lo;
  BigFloat lo = BigFloat::pow_int(base_lo, n, MPFR_RNDD);
  BigFloat hi = BigFloat::pow_int(base_hi, n, MPFR_RNDU);
  if (d != 1) {
    lo = BigFloat::root(lo, d, MPFR_RNDD);
    hi = BigFloat::root(hi, d, MPFR_RNDU);
  }
  return PrecInterval{std::move(lo), std::move(hi)};
}

PrecInterval PrecInterval::log(const PrecInterval& a) {
  return PrecInterval{BigFloat::log(a.lo, MPFR_RNDD), BigFloat::log(a.hi, MPFR_RNDU)};
}

double PrecInterval::rel_width() const {
  const double l = lo.to_double();
  const double h = hi.to_double();
  const double scale = std::max(std::abs(l), std::abs(h));
  if (scale == 0.0) return 0.0;
  return (h - l) / scale;
}

}  // namespace rihull
