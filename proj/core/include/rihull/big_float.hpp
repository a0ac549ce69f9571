#pragma once

#include <mpfr.h>

#include <string>

#include "rihull/rational.hpp"

namespace rihull {

// Fixed-precision MPFR float. 256 bits of mantissa puts one rounding at a
// relative error near 8e-78, far below the 1e-30 tracked-error budget even
// after thousands of operations.
class BigFloat {
 public:
  static constexpr mpfr_prec_t kPrec = 256;

  BigFloat();
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat from_rat(const Rat& q, mpfr_rnd_t rnd);
  static BigFloat from_long(long n);

  static BigFloat add(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd);
  static BigFloat sub(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd);
  static BigFloat mul(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd);
  static BigFloat div(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd);
  static BigFloat pow_int(const BigFloat& a, long k, mpfr_rnd_t rnd);
  static BigFloat root(const BigFloat& a, unsigned long k, mpfr_rnd_t rnd);
  static BigFloat log(const BigFloat& a, mpfr_rnd_t rnd);

  int cmp(const BigFloat& o) const { return mpfr_cmp(x_, o.x_); }
  int cmp(const Rat& q) const { return mpfr_cmp_q(x_, q.raw().get_mpq_t()); }
  int sgn() const { return mpfr_sgn(x_); }
  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  std::string str() const;

 private:
  mpfr_t x_;
};

// Closed enclosure [lo, hi] of a finite real, lo <= hi, maintained with
// directed rounding. All bases for pow/log are assumed positive.
struct PrecInterval {
  BigFloat lo, hi;

  static PrecInterval from_rat(const Rat& q);
  static PrecInterval add(const PrecInterval& a, const PrecInterval& b);
  static PrecInterval sub(const PrecInterval& a, const PrecInterval& b);
  static PrecInterval mul(const PrecInterval& a, const PrecInterval& b);
  static PrecInterval div(const PrecInterval& a, const PrecInterval& b);
  // x^(n/d) for x > 0, computed as integer power then d-th root so the
  // exponent is never rounded.
  static PrecInterval pow_rat(const PrecInterval& a, const Rat& e);
  static PrecInterval log(const PrecInterval& a);

  double rel_width() const;
  double mid_double() const { return 0.5 * (lo.to_double() + hi.to_double()); }
};

}  // namespace rihull
