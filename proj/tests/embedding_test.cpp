#include "doctest.h"
#include "rihull/embedding.hpp"
#include "rihull/errors.hpp"
#include "test_helpers.hpp"

using namespace rihull;
using th::iv;
using th::leb;
using th::steps;

namespace {
// mu with density 1 everywhere; nu with density 4 near zero, 1 on the tail.
TwoMeasures quarter_instance() {
  Interval half = Interval::positive_halfline();
  return TwoMeasures(half, StepFunction::constant(half, ExtScalar(Rat(1))),
                     steps(half, {Rat(1)}, {Rat(4), Rat(1)}));
}
}  // namespace

TEST_CASE("absolute continuity is a piecewise zero-set check") {
  Interval dom = iv(0, 2);
  StepFunction w = steps(dom, {Rat(1)}, {Rat(1), Rat(2)});
  CHECK(check_abs_continuity(TwoMeasures(dom, w, w)));
  StepFunction nu0 = steps(dom, {Rat(1)}, {Rat(0), Rat(1)});
  StepFunction mu1 = StepFunction::constant(dom, ExtScalar(Rat(1)));
  CHECK_FALSE(check_abs_continuity(TwoMeasures(dom, mu1, nu0)));
  StepFunction mu0 = steps(dom, {Rat(1)}, {Rat(0), Rat(3)});
  CHECK(check_abs_continuity(TwoMeasures(dom, mu0, nu0)));
}

TEST_CASE("the density quotient") {
  TwoMeasures m = quarter_instance();
  StepFunction d = radon_nikodym(m);
  CHECK(d == steps(Interval::positive_halfline(), {Rat(1)}, {Rat(1, 4), Rat(1)}));
  StepFunction bad_nu = steps(iv(0, 2), {Rat(1)}, {Rat(0), Rat(1)});
  StepFunction one = StepFunction::constant(iv(0, 2), ExtScalar(Rat(1)));
  CHECK_THROWS_AS(radon_nikodym(TwoMeasures(iv(0, 2), one, bad_nu)),
                  not_absolutely_continuous);
}

TEST_CASE("mixed-norm values from the frozen examples") {
  StepFunction f = steps(iv(0, 2), {Rat(1, 2)}, {Rat(3), Rat(1)});
  CHECK(l1_plus_linf_norm(f, leb(iv(0, 2))) == ExtScalar(Rat(2)));
  WeightedSpace small(StepFunction::constant(iv(0, 1), ExtScalar(Rat(1, 2))));
  CHECK(l1_plus_linf_norm(StepFunction::constant(iv(0, 1), ExtScalar(Rat(4))), small) ==
        ExtScalar(Rat(2)));
  Interval half = Interval::positive_halfline();
  CHECK(l1_plus_linf_norm(StepFunction::constant(half, ExtScalar(Rat(1))), leb(half)) ==
        ExtScalar(Rat(1)));
}

TEST_CASE("equal measures give the unit constant") {
  Interval half = Interval::positive_halfline();
  StepFunction one = StepFunction::constant(half, ExtScalar(Rat(1)));
  EmbeddingResult res = embedding_constant(TwoMeasures(half, one, one), Rat(2));
  CHECK(res.absolutely_continuous);
  CHECK(res.embeds);
  CHECK(res.budget == Rat(1));
  CHECK(res.A_pow_pprime.exact() == ExtScalar(Rat(1)));
  CHECK(res.A.exact() == ExtScalar(Rat(1)));
  CHECK(*res.pprime == Rat(2));
}

TEST_CASE("the quarter instance still has constant one") {
  EmbeddingResult res = embedding_constant(quarter_instance(), Rat(2));
  CHECK(res.A_pow_pprime.exact() == ExtScalar(Rat(1)));
  CHECK(res.A.exact() == ExtScalar(Rat(1)));
  EmbeddingResult sup = embedding_constant(quarter_instance(), Rat(1));
  CHECK_FALSE(sup.pprime.has_value());
  CHECK(sup.A.exact() == ExtScalar(Rat(1)));  // esssup of the quotient
}

TEST_CASE("small total mass shrinks the constant") {
  Interval dom = Interval::bounded(Rat(0), Rat(1, 2));
  StepFunction one = StepFunction::constant(dom, ExtScalar(Rat(1)));
  EmbeddingResult res = embedding_constant(TwoMeasures(dom, one, one), Rat(2));
  CHECK(res.budget == Rat(1, 2));
  CHECK(res.A_pow_pprime.exact() == ExtScalar(Rat(1, 2)));
  CHECK(res.A.to_double() == doctest::Approx(0.7071067812).epsilon(1e-9));
}

TEST_CASE("growing the target density never helps") {
  Interval dom = iv(0, 3);
  StepFunction mu = steps(dom, {Rat(1)}, {Rat(2), Rat(1)});
  StepFunction nu = steps(dom, {Rat(2)}, {Rat(1), Rat(3)});
  StepFunction nu_big = steps(dom, {Rat(2)}, {Rat(2), Rat(3)});
  Value a = embedding_constant(TwoMeasures(dom, mu, nu), Rat(2)).A;
  Value b = embedding_constant(TwoMeasures(dom, mu, nu_big), Rat(2)).A;
  CHECK(Value::le_within_error(b, a));
}

TEST_CASE("norm inequality and the extremal candidate") {
  Interval half = Interval::positive_halfline();
  StepFunction one = StepFunction::constant(half, ExtScalar(Rat(1)));
  TwoMeasures m(half, one, one);
  StepFunction chi = steps(half, {Rat(1)}, {Rat(1), Rat(0)});
  EmbeddingVerification ver = verify_embedding_norm(m, Rat(2), {chi, one});
  CHECK(ver.all_samples_ok);
  CHECK(ver.extremal_attains);
  REQUIRE(ver.samples.size() == 2);
  CHECK(ver.samples[0].lhs.exact() == ExtScalar(Rat(1)));   // chi attains equality
  CHECK(ver.samples[0].rhs.exact() == ExtScalar(Rat(1)));
  CHECK(Value::eq_within_error(ver.extremal_ratio, Value(Rat(1))));
}

TEST_CASE("superlevel carving hits the budget exactly") {
  WeightedSpace sp = leb(iv(0, 4));
  StepFunction d = steps(iv(0, 4), {Rat(1), Rat(2)}, {Rat(3), Rat(1), Rat(2)});
  SuperlevelSet set = carve_superlevel(d, sp, Rat(3, 2));
  CHECK(sp.measure(set.parts) == ExtScalar(Rat(3, 2)));
  CHECK(set.threshold == ExtScalar(Rat(2)));
}

TEST_CASE("change-of-measure identity, frozen instances") {
  Interval half = Interval::positive_halfline();
  WeightedSpace sp = leb(half);
  SUBCASE("flat weight") {
    CorollaryReport co = corollary_check(sp, StepFunction::constant(half, ExtScalar(Rat(1))), Rat(2));
    CHECK(co.finite);
    CHECK(co.k_norm.exact() == ExtScalar(Rat(1)));
    CHECK(co.identity_holds);
  }
  SUBCASE("two-level weight") {
    CorollaryReport co = corollary_check(sp, steps(half, {Rat(1)}, {Rat(1), Rat(2)}), Rat(2));
    CHECK(co.finite);
    CHECK(co.k_norm.exact() == ExtScalar(Rat(1)));
    CHECK(co.identity_holds);
  }
}
