#include "doctest.h"
#include "rihull/value.hpp"

using namespace rihull;

TEST_CASE("rational results stay exact") {
  Value a(Rat(3, 4));
  Value b(Rat(1, 4));
  CHECK(Value::add(a, b).is_exact());
  CHECK(Value::add(a, b).exact() == ExtScalar(Rat(1)));
  CHECK(Value::mul(a, b).exact() == ExtScalar(Rat(3, 16)));
  CHECK(Value::div(a, b).exact() == ExtScalar(Rat(3)));
  CHECK(Value::pow(a, Rat(2)).exact() == ExtScalar(Rat(9, 16)));
  CHECK(Value::pow(a, Rat(-1)).exact() == ExtScalar(Rat(4, 3)));
}

TEST_CASE("perfect roots are recognized") {
  CHECK(Value::pow(Value(Rat(4)), Rat(1, 2)).is_exact());
  CHECK(Value::pow(Value(Rat(4)), Rat(1, 2)).exact() == ExtScalar(Rat(2)));
  CHECK(Value::pow(Value(Rat(8, 27)), Rat(2, 3)).exact() == ExtScalar(Rat(4, 9)));
  CHECK(try_exact_root(Rat(9, 4), 2).value() == Rat(3, 2));
  CHECK_FALSE(try_exact_root(Rat(2), 2).has_value());
}

TEST_CASE("irrational powers carry tight enclosures") {
  Value r = Value::pow(Value(Rat(2)), Rat(1, 2));
  CHECK_FALSE(r.is_exact());
  CHECK(r.rel_width() < 1e-30);
  CHECK(r.to_double() == doctest::Approx(1.41421356237).epsilon(1e-9));
  CHECK(Value::certainly_lt(r, Value(Rat(3, 2))));
  CHECK(Value::certainly_le(Value(Rat(7, 5)), r));
}

TEST_CASE("comparisons respect the tracked error") {
  Value a(Rat(1, 3));
  Value b = Value::div(Value(Rat(1)), Value(Rat(3)));
  CHECK(Value::compare(a, b) == Value::Cmp::Equal);
  CHECK(Value::eq_within_error(a, b));
  CHECK(Value::le_within_error(a, b));
  Value root2 = Value::pow(Value(Rat(2)), Rat(1, 2));
  Value root2b = Value::pow(Value(Rat(2)), Rat(1, 2));
  CHECK(Value::eq_within_error(root2, root2b));
  CHECK(Value::compare(Value(Rat(1)), root2) == Value::Cmp::Less);
}

TEST_CASE("infinity flows through unharmed") {
  Value inf(ExtScalar::infinity());
  CHECK(inf.is_inf());
  CHECK(Value::add(inf, Value(Rat(5))).is_inf());
  CHECK(Value::mul(inf, Value(Rat(0))).exact() == ExtScalar(Rat(0)));
  CHECK(Value::mul(inf, Value(Rat(2))).is_inf());
  CHECK(Value::le_within_error(Value(Rat(100)), inf));
  CHECK(Value::pow(inf, Rat(0)).exact() == ExtScalar(Rat(1)));
}

TEST_CASE("sign of rational versus rational power") {
  CHECK(cmp_rational_vs_pow(Rat(3, 2), Rat(2), Rat(1, 2)) > 0);   // 9/4 > 2
  CHECK(cmp_rational_vs_pow(Rat(7, 5), Rat(2), Rat(1, 2)) < 0);   // 49/25 < 2
  CHECK(cmp_rational_vs_pow(Rat(4), Rat(8), Rat(2, 3)) == 0);     // 4^3 = 8^2
}
