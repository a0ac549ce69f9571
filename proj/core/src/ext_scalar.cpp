#include "rihull/ext_scalar.hpp"

#include <limits>

#include "rihull/errors.hpp"

namespace rihull {

const Rat& ExtScalar::finite() const {
  if (inf_) throw error("infinite value where a finite rational is required");
  return q_;
}

std::optional<ExtScalar> ExtScalar::parse(std::string_view text) {
  if (text == "inf") return ExtScalar::infinity();
  auto q = Rat::parse(text);
  if (!q) return std::nullopt;
  return ExtScalar(*q);
}

double ExtScalar::to_double() const {
  return inf_ ? std::numeric_limits<double>::infinity() : q_.to_double();
}

ExtScalar operator+(const ExtScalar& a, const ExtScalar& b) {
  if (a.inf_ || b.inf_) return ExtScalar::infinity();
  return ExtScalar(a.q_ + b.q_);
}

ExtScalar operator-(const ExtScalar& a, const ExtScalar& b) {
  if (b.inf_) throw error("subtraction of infinity is undefined");
  if (a.inf_) return ExtScalar::infinity();
  return ExtScalar(a.q_ - b.q_);
}

ExtScalar operator*(const ExtScalar& a, const ExtScalar& b) {
  if (a.is_zero() || b.is_zero()) return ExtScalar(Rat(0));  // 0 * inf = 0
  if (a.inf_ || b.inf_) {
    if (a.sgn() < 0 || b.sgn() < 0) throw error("negative multiple of infinity");
    return ExtScalar::infinity();
  }
  return ExtScalar(a.q_ * b.q_);
}

ExtScalar ExtScalar::pow_int(long k) const {
  if (k == 0) return ExtScalar(Rat(1));
  if (inf_) return k > 0 ? infinity() : ExtScalar(Rat(0));
  if (q_.is_zero() && k < 0) return infinity();
  return ExtScalar(q_.pow_int(k));
}

}  // namespace rihull
