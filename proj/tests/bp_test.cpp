#include "doctest.h"
#include "rihull/bp.hpp"
#include "rihull/errors.hpp"
#include "test_helpers.hpp"

using namespace rihull;
using th::steps;

TEST_CASE("monomial weights have a closed-form constant") {
  BpReport flat = bp_check(PowerTail::monomial(Rat(1), Rat(0)), Rat(2));
  CHECK(flat.in_class);
  CHECK(flat.exact_constant);
  CHECK(flat.constant.exact() == ExtScalar(Rat(1)));

  BpReport lin = bp_check(PowerTail::monomial(Rat(1), Rat(1)), Rat(3));
  CHECK(lin.in_class);
  CHECK(lin.constant.exact() == ExtScalar(Rat(2)));  // (1+1)/(3-1-1)

  BpReport quad = bp_check(PowerTail::monomial(Rat(1), Rat(2)), Rat(2));
  CHECK_FALSE(quad.in_class);
  CHECK(quad.constant.is_inf());

  // the boundary case is excluded: alpha = p - 1
  BpReport edge = bp_check(PowerTail::monomial(Rat(1), Rat(1, 2)), Rat(3, 2));
  CHECK_FALSE(edge.in_class);
}

TEST_CASE("the defining ratio stays below the reported constant") {
  PowerTail w = PowerTail::monomial(Rat(1), Rat(1));
  BpReport rep = bp_check(w, Rat(3));
  for (const Rat& r : {Rat(1, 7), Rat(1), Rat(12), Rat(355, 113)}) {
    Value q = bp_ratio_at(w, Rat(3), r);
    CHECK(Value::le_within_error(q, rep.constant));
    CHECK(Value::eq_within_error(q, rep.constant));  // constant ratio for monomials
  }
}

TEST_CASE("a compactly supported weight is in every class") {
  PowerTail box({Monomial{Interval::bounded(Rat(0), Rat(1)), Rat(1), Rat(1), Rat(0)},
                 Monomial{Interval::above(Rat(1)), Rat(0), Rat(1), Rat(0)}});
  BpReport rep = bp_check(box, Rat(2));
  CHECK(rep.in_class);
  CHECK(Value::eq_within_error(rep.constant, Value(Rat(1))));
  for (const Rat& r : rep.checked_grid)
    CHECK(Value::le_within_error(bp_ratio_at(box, Rat(2), r), rep.constant));
}

TEST_CASE("weights that explode near zero are refused") {
  CHECK_THROWS_AS(bp_check(PowerTail::monomial(Rat(1), Rat(-1)), Rat(2)), non_integrable_weight);
}

TEST_CASE("the rearrangement of an even power weight") {
  PowerTail v1 = power_weight_rearrangement(Rat(1));
  REQUIRE(v1.pieces().size() == 1);
  CHECK(v1.pieces()[0].scale == Rat(2));
  CHECK(v1.pieces()[0].exponent == Rat(1));
  CHECK(v1.value_at(Rat(2)).exact() == ExtScalar(Rat(1)));
  CHECK(v1.value_at(Rat(3)).exact() == ExtScalar(Rat(3, 2)));

  PowerTail v0 = power_weight_rearrangement(Rat(0));
  CHECK(v0.value_at(Rat(10)).exact() == ExtScalar(Rat(1)));

  PowerTail v2 = power_weight_rearrangement(Rat(2));
  CHECK(v2.value_at(Rat(2)).exact() == ExtScalar(Rat(1)));
  CHECK(v2.value_at(Rat(4)).exact() == ExtScalar(Rat(4)));
}

TEST_CASE("classical Lorentz identification, frozen values") {
  StepFunction g = steps(Interval::bounded(Rat(0), Rat(1)), {}, {Rat(1)});
  LorentzIdentityReport rep = classical_lorentz_identity_check(g, Rat(1), Rat(3));
  CHECK(rep.q == Rat(3, 2));
  CHECK(rep.exponent_identity);
  CHECK(rep.integrand_match);
  CHECK(rep.scaling_match);
  CHECK(rep.lambda_pow_plain.exact() == ExtScalar(Rat(1, 2)));
  CHECK(rep.lambda_pow_scaled.exact() == ExtScalar(Rat(1, 4)));

  CHECK_THROWS(classical_lorentz_identity_check(g, Rat(2), Rat(3)));  // alpha >= p-1
}

TEST_CASE("in-class weights feed the two-inclusion chain") {
  Interval half = Interval::positive_halfline();
  WeightedSpace sp = th::leb(half);
  StepFunction v = StepFunction::constant(half, ExtScalar(Rat(1)));
  std::vector<StepFunction> samples = {steps(half, {Rat(1)}, {Rat(2), Rat(0)}),
                                       steps(half, {Rat(2)}, {Rat(1, 2), Rat(0)})};
  BanachChainReport rep = bp_implies_banach_chain_check(sp, v, Rat(2), samples);
  CHECK(rep.bp_ok);
  CHECK(rep.first_inclusion_ok);
  CHECK(rep.second_inclusion_ok);
  CHECK(rep.checked == samples.size());
}
