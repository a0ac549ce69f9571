#include "doctest.h"
#include "rihull/rearrangement.hpp"
#include "test_helpers.hpp"

using namespace rihull;
using th::iv;
using th::leb;
using th::steps;

namespace {
const StepFunction kTwoPiece = steps(iv(0, 1), {Rat(1, 2)}, {Rat(1), Rat(3)});
}

TEST_CASE("the two-piece example rearranges both ways") {
  WeightedSpace sp = leb(iv(0, 1));
  CHECK(decreasing_rearrangement(kTwoPiece, sp) ==
        steps(iv(0, 1), {Rat(1, 2)}, {Rat(3), Rat(1)}));
  StepFunction flow = increasing_rearrangement(kTwoPiece, sp);
  CHECK(flow.domain() == Interval::positive_halfline());
  CHECK(flow.value_at(Rat(1, 4)) == ExtScalar(Rat(1)));
  CHECK(flow.value_at(Rat(3, 4)) == ExtScalar(Rat(3)));
  CHECK(flow.value_at(Rat(2)).is_inf());  // past the total mass
  CHECK(esssup(kTwoPiece, sp) == ExtScalar(Rat(3)));
}

TEST_CASE("distribution functions of the two-piece example") {
  WeightedSpace sp = leb(iv(0, 1));
  StepFunction mu = distribution(kTwoPiece, sp);
  CHECK(mu.value_at(Rat(1, 2)) == ExtScalar(Rat(1)));
  CHECK(mu.value_at(Rat(2)) == ExtScalar(Rat(1, 2)));
  CHECK(mu.value_at(Rat(4)) == ExtScalar(Rat(0)));
  StepFunction kappa = lower_distribution(kTwoPiece, sp);
  CHECK(kappa.value_at(Rat(1, 2)) == ExtScalar(Rat(0)));
  CHECK(kappa.value_at(Rat(2)) == ExtScalar(Rat(1, 2)));
  CHECK(kappa.value_at(Rat(4)) == ExtScalar(Rat(1)));
  CHECK(mu.is_nonincreasing());
  CHECK(kappa.is_nondecreasing());
}

TEST_CASE("pointwise formulas reproduce the rearrangements") {
  WeightedSpace sp = leb(iv(0, 1));
  StepFunction mu = distribution(kTwoPiece, sp);
  StepFunction kappa = lower_distribution(kTwoPiece, sp);
  CHECK(dec_inf_formula_at(mu, Rat(1, 4)) == ExtScalar(Rat(3)));
  CHECK(dec_inf_formula_at(mu, Rat(3, 4)) == ExtScalar(Rat(1)));
  CHECK(sup_formula_at(kappa, Rat(1, 4)) == ExtScalar(Rat(1)));
  CHECK(inf_formula_at(kappa, Rat(1, 4)) == ExtScalar(Rat(1)));
  CHECK(sup_formula_at(kappa, Rat(3, 4)) == ExtScalar(Rat(3)));
  CHECK(sup_formula_at(kappa, Rat(2)).is_inf());
}

TEST_CASE("equimeasurability is exactly decidable") {
  WeightedSpace leb2 = leb(iv(0, 2));
  StepFunction f = steps(iv(0, 2), {Rat(1)}, {Rat(3), Rat(1)});
  StepFunction g = steps(iv(0, 2), {Rat(1)}, {Rat(1), Rat(3)});
  CHECK(equimeasurable(f, leb2, g, leb2));
  StepFunction chi1 = steps(iv(0, 2), {Rat(1)}, {Rat(1), Rat(0)});
  StepFunction chi2 = StepFunction::constant(iv(0, 2), ExtScalar(Rat(1)));
  CHECK_FALSE(equimeasurable(chi1, leb2, chi2, leb2));
  WeightedSpace sp = leb(iv(0, 1));
  StepFunction fstar = decreasing_rearrangement(kTwoPiece, sp);
  CHECK(equimeasurable(kTwoPiece, sp, fstar, leb(fstar.domain())));
}

TEST_CASE("finite-space reflection identity") {
  WeightedSpace sp = leb(iv(0, 1));
  CHECK(finite_space_duality_check(kTwoPiece, sp));
  CHECK(finite_space_duality_check(StepFunction::constant(iv(0, 1), ExtScalar(Rat(5))), sp));
}

TEST_CASE("an infinite zero set flattens the nondecreasing rearrangement") {
  WeightedSpace half = leb(Interval::positive_halfline());
  StepFunction chi = steps(Interval::positive_halfline(), {Rat(1)}, {Rat(1), Rat(0)});
  CHECK(increasing_rearrangement(chi, half).is_zero());
  StepFunction fstar = decreasing_rearrangement(chi, half);
  CHECK(fstar.value_at(Rat(1, 2)) == ExtScalar(Rat(1)));
  CHECK(fstar.value_at(Rat(2)) == ExtScalar(Rat(0)));
}

TEST_CASE("layer cake identity") {
  WeightedSpace sp = leb(iv(0, 1));
  CHECK(layer_cake_check(kTwoPiece, sp));
  WeightedSpace half = leb(Interval::positive_halfline());
  StepFunction g = steps(Interval::positive_halfline(), {Rat(2)}, {Rat(5), Rat(0)});
  CHECK(layer_cake_check(g, half));
}

TEST_CASE("value groups exclude measure-zero carriers") {
  WeightedSpace sp(steps(iv(0, 2), {Rat(1)}, {Rat(1), Rat(0)}));
  StepFunction f = steps(iv(0, 2), {Rat(1)}, {Rat(2), Rat(9)});
  auto groups = value_groups(f, sp);
  REQUIRE(groups.size() == 1);  // the value 9 lives on a null set
  CHECK(groups[0].value == ExtScalar(Rat(2)));
  CHECK(groups[0].mass == ExtScalar(Rat(1)));
  CHECK(esssup(f, sp) == ExtScalar(Rat(2)));
}
