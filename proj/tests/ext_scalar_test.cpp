#include "doctest.h"
#include "rihull/errors.hpp"
#include "rihull/ext_scalar.hpp"

using rihull::ExtScalar;
using rihull::Rat;

TEST_CASE("infinity dominates every rational") {
  ExtScalar inf = ExtScalar::infinity();
  CHECK(inf > ExtScalar(Rat(1000000)));
  CHECK(inf == ExtScalar::infinity());
  CHECK(inf.is_inf());
  CHECK_FALSE(inf.is_finite());
  CHECK(inf.str() == "inf");
}

TEST_CASE("the measure-theoretic product convention") {
  ExtScalar inf = ExtScalar::infinity();
  ExtScalar zero(Rat(0));
  CHECK(zero * inf == zero);
  CHECK(inf * zero == zero);
  CHECK(ExtScalar(Rat(2)) * inf == inf);
  CHECK(inf + ExtScalar(Rat(5)) == inf);
  CHECK(inf + inf == inf);
}

TEST_CASE("undefined differences are refused") {
  ExtScalar inf = ExtScalar::infinity();
  CHECK_THROWS_AS(inf - inf, rihull::error);
  CHECK_THROWS_AS(ExtScalar(Rat(3)) - inf, rihull::error);
  CHECK(inf - ExtScalar(Rat(3)) == inf);
}

TEST_CASE("integer powers at the boundary values") {
  ExtScalar inf = ExtScalar::infinity();
  ExtScalar zero(Rat(0));
  CHECK(zero.pow_int(0) == ExtScalar(Rat(1)));
  CHECK(inf.pow_int(0) == ExtScalar(Rat(1)));
  CHECK(zero.pow_int(-1) == inf);
  CHECK(inf.pow_int(-2) == zero);
  CHECK(inf.pow_int(3) == inf);
  CHECK(ExtScalar(Rat(2)).pow_int(3) == ExtScalar(Rat(8)));
}

TEST_CASE("parsing extended scalars") {
  CHECK(*ExtScalar::parse("inf") == ExtScalar::infinity());
  CHECK(*ExtScalar::parse("3/4") == ExtScalar(Rat(3, 4)));
  CHECK_FALSE(ExtScalar::parse("-inf").has_value());
}
