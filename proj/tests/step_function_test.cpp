#include "doctest.h"
#include "rihull/step_function.hpp"
#include "test_helpers.hpp"

using namespace rihull;
using th::iv;
using th::steps;

TEST_CASE("adjacent equal values merge to a canonical form") {
  StepFunction f(iv(0, 3), {Rat(1), Rat(2)}, {ExtScalar(Rat(5)), ExtScalar(Rat(5)), ExtScalar(Rat(7))});
  CHECK(f.piece_count() == 2);
  CHECK(f.breaks() == std::vector<Rat>{Rat(2)});
  CHECK(f == steps(iv(0, 3), {Rat(2)}, {Rat(5), Rat(7)}));
}

TEST_CASE("pieces and pointwise evaluation") {
  StepFunction f = steps(iv(0, 1), {Rat(1, 2)}, {Rat(1), Rat(3)});
  CHECK(f.piece(0) == Interval::bounded(Rat(0), Rat(1, 2)));
  CHECK(f.piece(1) == Interval::bounded(Rat(1, 2), Rat(1)));
  CHECK(f.value_at(Rat(1, 4)) == ExtScalar(Rat(1)));
  CHECK(f.value_at(Rat(1, 2)) == ExtScalar(Rat(3)));  // right piece at a break
  CHECK(f.max_value() == ExtScalar(Rat(3)));
  CHECK(f.all_finite());
  CHECK_FALSE(f.is_nonincreasing());
  CHECK(f.is_nondecreasing());
}

TEST_CASE("pointwise algebra on the common refinement") {
  StepFunction f = steps(iv(0, 2), {Rat(1)}, {Rat(1), Rat(3)});
  StepFunction g = steps(iv(0, 2), {Rat(1, 2)}, {Rat(2), Rat(1)});
  CHECK(StepFunction::add(f, g) ==
        steps(iv(0, 2), {Rat(1, 2), Rat(1)}, {Rat(3), Rat(2), Rat(4)}));
  CHECK(StepFunction::multiply(f, g) ==
        steps(iv(0, 2), {Rat(1, 2), Rat(1)}, {Rat(2), Rat(1), Rat(3)}));
  CHECK(StepFunction::pointwise_min(f, g) ==
        steps(iv(0, 2), {Rat(1, 2)}, {Rat(1), Rat(1)}));
  CHECK(StepFunction::pointwise_max(f, g) ==
        steps(iv(0, 2), {Rat(1, 2), Rat(1)}, {Rat(2), Rat(1), Rat(3)}));
  CHECK(StepFunction::le_ae(f, StepFunction::add(f, g)));
  CHECK_FALSE(StepFunction::le_ae(f, g));
  CHECK(refined_pieces(f, g).size() == 3);
}

TEST_CASE("masking, restriction, reflection") {
  StepFunction f = steps(iv(0, 1), {Rat(1, 2)}, {Rat(1), Rat(3)});
  CHECK(f.reflect(Rat(1)) == steps(iv(0, 1), {Rat(1, 2)}, {Rat(3), Rat(1)}));
  CHECK(f.restrict_to(Interval::bounded(Rat(1, 2), Rat(1))) ==
        StepFunction::constant(Interval::bounded(Rat(1, 2), Rat(1)), ExtScalar(Rat(3))));
  StepFunction masked = f.mask({Interval::bounded(Rat(0), Rat(1, 4))});
  CHECK(masked == steps(iv(0, 1), {Rat(1, 4)}, {Rat(1), Rat(0)}));
  CHECK(masked.domain() == f.domain());
}

TEST_CASE("value maps") {
  StepFunction f = steps(iv(0, 1), {Rat(1, 2)}, {Rat(1), Rat(3)});
  CHECK(f.scale_values(Rat(2)) == steps(iv(0, 1), {Rat(1, 2)}, {Rat(2), Rat(6)}));
  CHECK(f.pow_int(2) == steps(iv(0, 1), {Rat(1, 2)}, {Rat(1), Rat(9)}));
  CHECK(f.scale_values(Rat(0)).is_zero());
  StepFunction inv = f.map_values([](const ExtScalar& v) { return ExtScalar(v.finite().inverse()); });
  CHECK(inv == steps(iv(0, 1), {Rat(1, 2)}, {Rat(1), Rat(1, 3)}));
}

TEST_CASE("infinite values are representable") {
  StepFunction f(Interval::positive_halfline(), {Rat(1)},
                 {ExtScalar(Rat(2)), ExtScalar::infinity()});
  CHECK_FALSE(f.all_finite());
  CHECK(f.max_value().is_inf());
  CHECK(f.value_at(Rat(5)).is_inf());
}
