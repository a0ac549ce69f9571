#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rihull {

// Arbitrary-precision rational in canonical form: coprime numerator and
// denominator, denominator > 0.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rat(long n, long d);
  explicit Rat(mpq_class q);

  // Accepts the literal grammar [-]?[0-9]+(/[1-9][0-9]*)?
  static std::optional<Rat> parse(std::string_view text);
  // Exact conversion; every finite double is rational.
  static Rat from_double_exact(double x);

  std::string str() const;
  double to_double() const { return q_.get_d(); }
  const mpq_class& raw() const { return q_; }

  int sgn() const { return ::sgn(q_); }
  bool is_zero() const { return sgn() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  Rat abs() const;
  Rat inverse() const;
  // Numerator of the canonical form, with sign; denominator is positive.
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& b) { q_ += b.q_; return *this; }
  Rat& operator-=(const Rat& b) { q_ -= b.q_; return *this; }
  Rat& operator*=(const Rat& b) { q_ *= b.q_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return ::cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = ::cmp(a.q_, b.q_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  // Integer power with exact result; k may be negative (throws on 0^-k).
  Rat pow_int(long k) const;

 private:
  mpq_class q_;
};

inline Rat min(const Rat& a, const Rat& b) { return a <= b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a >= b ? a : b; }

}  // namespace rihull
