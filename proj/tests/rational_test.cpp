#include "doctest.h"
#include "rihull/rational.hpp"

using rihull::Rat;

TEST_CASE("rationals are canonical") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-3, 6) == Rat(-1, 2));
  CHECK(Rat(0, 5) == Rat(0));
  CHECK(Rat(7).is_integer());
  CHECK_FALSE(Rat(7, 2).is_integer());
}

TEST_CASE("parsing follows the rational literal grammar") {
  CHECK(*Rat::parse("3/4") == Rat(3, 4));
  CHECK(*Rat::parse("-2") == Rat(-2));
  CHECK(*Rat::parse("0") == Rat(0));
  CHECK(*Rat::parse("10/20") == Rat(1, 2));
  CHECK_FALSE(Rat::parse("1/0").has_value());
  CHECK_FALSE(Rat::parse("1/02").has_value());
  CHECK_FALSE(Rat::parse("").has_value());
  CHECK_FALSE(Rat::parse("1.5").has_value());
  CHECK_FALSE(Rat::parse("+1").has_value());
}

TEST_CASE("arithmetic and ordering") {
  Rat a(1, 3), b(1, 6);
  CHECK(a + b == Rat(1, 2));
  CHECK(a - b == Rat(1, 6));
  CHECK(a * b == Rat(1, 18));
  CHECK(a / b == Rat(2));
  CHECK(a > b);
  CHECK(min(a, b) == b);
  CHECK(max(a, b) == a);
  CHECK(Rat(-5, 7).abs() == Rat(5, 7));
  CHECK(Rat(-5, 7).sgn() == -1);
}

TEST_CASE("powers and inverses") {
  CHECK(Rat(2, 3).pow_int(3) == Rat(8, 27));
  CHECK(Rat(2, 3).pow_int(-2) == Rat(9, 4));
  CHECK(Rat(5).pow_int(0) == Rat(1));
  CHECK(Rat(4, 9).inverse() == Rat(9, 4));
}

TEST_CASE("doubles with exact binary representations round-trip") {
  CHECK(Rat::from_double_exact(0.5) == Rat(1, 2));
  CHECK(Rat::from_double_exact(-3.25) == Rat(-13, 4));
  CHECK(Rat::from_double_exact(0.0) == Rat(0));
  CHECK(Rat(1, 2).to_double() == 0.5);
  CHECK(Rat(1, 2).str() == "1/2");
  CHECK(Rat(-7).str() == "-7");
}
