#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "rihull/rational.hpp"

namespace rihull {

// Rational extended with +infinity. The multiplicative convention is
// 0 * inf = 0 (measure-theoretic); inf - inf and x - inf are errors.
class ExtScalar {
 public:
  ExtScalar() : q_(0) {}
  ExtScalar(Rat q) : q_(std::move(q)) {}  // NOLINT: implicit by design
  ExtScalar(long n) : q_(n) {}            // NOLINT
  static ExtScalar infinity() {
    ExtScalar s;
    s.inf_ = true;
    return s;
  }

  bool is_inf() const { return inf_; }
  bool is_finite() const { return !inf_; }
  const Rat& finite() const;
  int sgn() const { return inf_ ? 1 : q_.sgn(); }
  bool is_zero() const { return !inf_ && q_.is_zero(); }

  static std::optional<ExtScalar> parse(std::string_view text);
  std::string str() const { return inf_ ? "inf" : q_.str(); }
  double to_double() const;

  friend ExtScalar operator+(const ExtScalar& a, const ExtScalar& b);
  friend ExtScalar operator-(const ExtScalar& a, const ExtScalar& b);
  friend ExtScalar operator*(const ExtScalar& a, const ExtScalar& b);

  friend bool operator==(const ExtScalar& a, const ExtScalar& b) {
    if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const ExtScalar& a, const ExtScalar& b) {
    if (a.inf_ && b.inf_) return std::strong_ordering::equal;
    if (a.inf_) return std::strong_ordering::greater;
    if (b.inf_) return std::strong_ordering::less;
    return a.q_ <=> b.q_;
  }

  // Integer power; 0^0 = 1, inf^0 = 1, 0^k = inf for k < 0, inf^k = 0 for k < 0.
  ExtScalar pow_int(long k) const;

 private:
  Rat q_;
  bool inf_ = false;
};

inline ExtScalar min(const ExtScalar& a, const ExtScalar& b) { return a <= b ? a : b; }
inline ExtScalar max(const ExtScalar& a, const ExtScalar& b) { return a >= b ? a : b; }

}  // namespace rihull
