#include "doctest.h"
#include "rihull/interval.hpp"

using namespace rihull;

TEST_CASE("lengths, including unbounded sides") {
  CHECK(Interval::bounded(Rat(1), Rat(4)).length() == ExtScalar(Rat(3)));
  CHECK(Interval::above(Rat(0)).length().is_inf());
  CHECK(Interval::whole().length().is_inf());
}

TEST_CASE("open intervals exclude endpoints") {
  Interval i = Interval::bounded(Rat(0), Rat(1));
  CHECK(i.contains_point(Rat(1, 2)));
  CHECK_FALSE(i.contains_point(Rat(0)));
  CHECK_FALSE(i.contains_point(Rat(1)));
  CHECK(Interval::whole().contains(i));
  CHECK(i.contains(Interval::bounded(Rat(0), Rat(1))));
  CHECK_FALSE(i.contains(Interval::bounded(Rat(0), Rat(2))));
}

TEST_CASE("intersection and disjointness") {
  Interval a = Interval::bounded(Rat(0), Rat(2));
  Interval b = Interval::bounded(Rat(1), Rat(3));
  auto c = intersect(a, b);
  REQUIRE(c.has_value());
  CHECK(*c == Interval::bounded(Rat(1), Rat(2)));
  CHECK_FALSE(intersect(a, Interval::bounded(Rat(2), Rat(3))).has_value());
  CHECK(disjoint(a, Interval::bounded(Rat(2), Rat(3))));
  CHECK_FALSE(disjoint(a, b));
}

TEST_CASE("unions normalize and complements tile") {
  auto u = normalize_union({Interval::bounded(Rat(1), Rat(2)), Interval::bounded(Rat(0), Rat(1)),
                            Interval::bounded(Rat(3), Rat(4))});
  REQUIRE(u.size() == 2);
  CHECK(u[0] == Interval::bounded(Rat(0), Rat(2)));
  CHECK(u[1] == Interval::bounded(Rat(3), Rat(4)));

  auto gaps = complement_within(Interval::bounded(Rat(0), Rat(5)), u);
  REQUIRE(gaps.size() == 2);
  CHECK(gaps[0] == Interval::bounded(Rat(2), Rat(3)));
  CHECK(gaps[1] == Interval::bounded(Rat(4), Rat(5)));

  auto all = complement_within(Interval::whole(), {});
  REQUIRE(all.size() == 1);
  CHECK(all[0] == Interval::whole());
}

TEST_CASE("endpoint comparisons with the two infinities") {
  CHECK(cmp_lower(std::nullopt, Rat(0)) < 0);
  CHECK(cmp_upper(std::nullopt, Rat(0)) > 0);
  CHECK(cmp_lower_vs_upper(std::nullopt, std::nullopt) < 0);
  CHECK(cmp_lower_vs_upper(Rat(1), Rat(1)) == 0);
}
