#pragma once

#include <vector>

#include "rihull/step_function.hpp"
#include "rihull/value.hpp"

namespace rihull {

// One monomial piece w(t) = coeff * (t/scale)^exponent on an open
// subinterval of (0, inf). The scale keeps profiles like (t/2)^a exactly
// representable without irrational coefficients.
struct Monomial {
  Interval iv;
  Rat coeff;     // >= 0
  Rat scale;     // > 0
  Rat exponent;
};

// A weight on (0, inf) given by finitely many monomial pieces tiling the
// half-line; generalizes step functions (exponent 0).
class PowerTail {
 public:
  explicit PowerTail(std::vector<Monomial> pieces);
  static PowerTail monomial(const Rat& coeff, const Rat& exponent);
  // Step function on (0, inf) with finite values, piece for piece.
  static PowerTail from_step(const StepFunction& w);

  const std::vector<Monomial>& pieces() const { return pieces_; }
  bool is_zero() const;
  // Pointwise value as a Value (exact for integer exponents).
  Value value_at(const Rat& t) const;

 private:
  std::vector<Monomial> pieces_;
};

// integral over `window` of coeff * (t/scale)^exponent * t^shift dt.
// Exact when everything stays rational; enclosure otherwise; divergent
// improper integrals come back as exact +inf.
Value monomial_integrate_shifted(const Monomial& m, const Rat& shift, const Interval& window);
Value monomial_integrate(const Monomial& m, const Interval& window);

// integral of w over window, and with the extra t^shift factor.
Value powertail_integral(const PowerTail& w, const Interval& window);
Value powertail_integral_shifted(const PowerTail& w, const Rat& shift, const Interval& window);

// integral over (0, inf) of g(t)^p w(t) dt for a step profile g on (0, m)
// or (0, inf); the profile is treated as 0 past its domain.
Value step_power_against_powertail(const StepFunction& g, const Rat& p, const PowerTail& w);

}  // namespace rihull
