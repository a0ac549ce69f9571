#pragma once

#include <optional>
#include <string>
#include <variant>

#include "rihull/big_float.hpp"
#include "rihull/ext_scalar.hpp"

namespace rihull {

// A nonnegative quantity that is either exact (rational or +inf) or a
// rigorous high-precision enclosure of a finite real. Every inequality
// decided through Value is decided with the tracked error as margin.
class Value {
 public:
  Value() : v_(ExtScalar(Rat(0))) {}
  Value(ExtScalar s) : v_(std::move(s)) {}  // NOLINT: implicit by design
  Value(Rat q) : v_(ExtScalar(std::move(q))) {}  // NOLINT
  Value(PrecInterval iv) : v_(std::move(iv)) {}  // NOLINT

  bool is_exact() const { return std::holds_alternative<ExtScalar>(v_); }
  bool is_inf() const { return is_exact() && exact().is_inf(); }
  const ExtScalar& exact() const { return std::get<ExtScalar>(v_); }
  const PrecInterval& enclosure() const { return std::get<PrecInterval>(v_); }
  // Exact values widen to a degenerate enclosure; +inf does not widen.
  PrecInterval widen() const;

  static Value add(const Value& a, const Value& b);
  static Value sub(const Value& a, const Value& b);  // a - b, a >= b expected when exact-inf involved
  static Value mul(const Value& a, const Value& b);
  static Value div(const Value& a, const Value& b);
  // a^e for rational e. Exact when the result is rational (integer exponent,
  // or perfect root); enclosure otherwise. Conventions of ExtScalar::pow_int
  // at 0 and inf.
  static Value pow(const Value& a, const Rat& e);

  enum class Cmp { Less, Equal, Greater, Overlap };
  static Cmp compare(const Value& a, const Value& b);
  static bool certainly_le(const Value& a, const Value& b);
  static bool certainly_lt(const Value& a, const Value& b);
  // Not certainly greater: holds unless a > b beyond the tracked error.
  static bool le_within_error(const Value& a, const Value& b);
  static bool eq_within_error(const Value& a, const Value& b);

  double rel_width() const { return is_exact() ? 0.0 : enclosure().rel_width(); }
  double to_double() const;
  std::string str() const;

 private:
  std::variant<ExtScalar, PrecInterval> v_;
};

// Exact k-th root when num and den are perfect k-th powers.
std::optional<Rat> try_exact_root(const Rat& x, unsigned long k);
// Sign of q - base^(n/d) for positive q, base; decided via integer powers.
int cmp_rational_vs_pow(const Rat& q, const Rat& base, const Rat& expo);

}  // namespace rihull
