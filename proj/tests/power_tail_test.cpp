#include "doctest.h"
#include "rihull/errors.hpp"
#include "rihull/power_tail.hpp"
#include "test_helpers.hpp"

using namespace rihull;
using th::iv;
using th::steps;

TEST_CASE("closed-form monomial integrals") {
  Monomial flat{Interval::bounded(Rat(0), Rat(1)), Rat(1), Rat(1), Rat(0)};
  CHECK(monomial_integrate(flat, Interval::bounded(Rat(0), Rat(1))).exact() ==
        ExtScalar(Rat(1)));
  Monomial sq{Interval::above(Rat(1)), Rat(1), Rat(1), Rat(-2)};
  CHECK(monomial_integrate(sq, Interval::above(Rat(1))).exact() == ExtScalar(Rat(1)));
  Monomial harmonic{Interval::above(Rat(0)), Rat(1), Rat(1), Rat(-1)};
  CHECK(monomial_integrate(harmonic, Interval::above(Rat(1))).is_inf());
  CHECK(monomial_integrate(harmonic, Interval::bounded(Rat(0), Rat(1))).is_inf());
}

TEST_CASE("the logarithmic case is enclosed, not guessed") {
  Monomial harmonic{Interval::above(Rat(0)), Rat(1), Rat(1), Rat(-1)};
  Value ln2 = monomial_integrate(harmonic, Interval::bounded(Rat(1), Rat(2)));
  CHECK_FALSE(ln2.is_exact());
  CHECK(ln2.to_double() == doctest::Approx(0.69314718056).epsilon(1e-12));
}

TEST_CASE("scales keep profiles rational") {
  // (t/2)^2 over (0,2): t^3/12 evaluated = 2/3
  Monomial m{Interval::above(Rat(0)), Rat(1), Rat(2), Rat(2)};
  CHECK(monomial_integrate(m, Interval::bounded(Rat(0), Rat(2))).exact() ==
        ExtScalar(Rat(2, 3)));
  PowerTail w({m});
  CHECK(w.value_at(Rat(2)).exact() == ExtScalar(Rat(1)));
  CHECK(w.value_at(Rat(1)).exact() == ExtScalar(Rat(1, 4)));
}

TEST_CASE("shifted integrals power the class checks") {
  PowerTail w = PowerTail::monomial(Rat(1), Rat(0));
  // integral over (r, inf) of t^{-2} dt = 1/r
  CHECK(powertail_integral_shifted(w, Rat(-2), Interval::above(Rat(4))).exact() ==
        ExtScalar(Rat(1, 4)));
  CHECK(powertail_integral(w, Interval::bounded(Rat(0), Rat(5))).exact() == ExtScalar(Rat(5)));
  CHECK(powertail_integral(w, Interval::above(Rat(1))).is_inf());
}

TEST_CASE("step weights lift to the monomial form") {
  StepFunction v = steps(Interval::positive_halfline(), {Rat(1)}, {Rat(3), Rat(1, 2)});
  PowerTail w = PowerTail::from_step(v);
  REQUIRE(w.pieces().size() == 2);
  CHECK(w.pieces()[0].coeff == Rat(3));
  CHECK(w.pieces()[0].exponent == Rat(0));
  CHECK(w.value_at(Rat(2)).exact() == ExtScalar(Rat(1, 2)));
  CHECK_THROWS(PowerTail::from_step(steps(iv(0, 1), {}, {Rat(1)})));  // wrong domain
}

TEST_CASE("profile power against a weight") {
  StepFunction g = steps(Interval::bounded(Rat(0), Rat(1)), {}, {Rat(1)});
  PowerTail lin = PowerTail::monomial(Rat(1), Rat(1));
  CHECK(step_power_against_powertail(g, Rat(3), lin).exact() == ExtScalar(Rat(1, 2)));
  StepFunction g2 = steps(Interval::bounded(Rat(0), Rat(2)), {Rat(1)}, {Rat(2), Rat(1)});
  // 2 * 1 + 1 * 1 = 3 against the flat weight, p = 1
  CHECK(step_power_against_powertail(g2, Rat(1), PowerTail::monomial(Rat(1), Rat(0))).exact() ==
        ExtScalar(Rat(3)));
}

TEST_CASE("weights must tile the half-line") {
  CHECK_THROWS(PowerTail({Monomial{Interval::bounded(Rat(0), Rat(1)), Rat(1), Rat(1), Rat(0)}}));
  CHECK_THROWS(PowerTail({Monomial{Interval::bounded(Rat(1), Rat(2)), Rat(1), Rat(1), Rat(0)},
                          Monomial{Interval::above(Rat(2)), Rat(1), Rat(1), Rat(0)}}));
}
