#include "doctest.h"
#include "rihull/embedding.hpp"
#include "rihull/generators.hpp"
#include "rihull/mpt.hpp"
#include "test_helpers.hpp"

using namespace rihull;

TEST_CASE("generation is deterministic per seed") {
  Rng a(42), b(42);
  for (int i = 0; i < 20; ++i) {
    Interval da = random_domain(a);
    Interval db = random_domain(b);
    CHECK(da == db);
    StepFunction fa = random_step(a, da, StepOptions{});
    StepFunction fb = random_step(b, db, StepOptions{});
    CHECK(fa == fb);
  }
  Rng c(43);
  bool all_equal = true;
  for (int i = 0; i < 20; ++i) {
    Interval dc = random_domain(c);
    StepFunction fc = random_step(c, dc, StepOptions{});
    Rng a2(42);
    Interval da = random_domain(a2);
    all_equal = all_equal && dc == da && fc == random_step(a2, da, StepOptions{});
  }
  CHECK_FALSE(all_equal);
}

TEST_CASE("options shape the generated functions") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Interval dom = random_domain(rng);
    StepOptions opt;
    opt.zero_tails = true;
    opt.ensure_positive = true;
    StepFunction f = random_step(rng, dom, opt);
    CHECK(f.piece_count() <= 8);
    CHECK_FALSE(f.is_zero());
    CHECK(f.all_finite());
    if (!dom.bounded_below()) CHECK(f.values().front().is_zero());
    if (!dom.bounded_above()) CHECK(f.values().back().is_zero());
  }
}

TEST_CASE("spaces respect the requested mass profile") {
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    WeightedSpace fin = random_space(rng, DomainKind::HalfLine, true);
    CHECK(fin.total().is_finite());
    CHECK(fin.total() > ExtScalar(Rat(0)));
    WeightedSpace inf = random_space(rng, DomainKind::WholeLine, false);
    CHECK(inf.total().is_inf());
  }
}

TEST_CASE("profiles are valid rearrangement outputs") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    Rat mass = random_rat(rng, 50, 10);
    StepFunction g = random_profile(rng, mass);
    CHECK(g.is_nonincreasing());
    CHECK(g.domain() == Interval::bounded(Rat(0), mass));
    CHECK(g.all_finite());
  }
}

TEST_CASE("classified instances match their promises") {
  Rng rng(13);
  for (int i = 0; i < 60; ++i) {
    SpaceAndFunction yes = random_cond_i_instance(rng);
    CHECK(ryff_conditions(yes.f, yes.space).tag != RyffCase::Neither);
    SpaceAndFunction no = random_neither_instance(rng);
    CHECK(ryff_conditions(no.f, no.space).tag == RyffCase::Neither);
  }
}

TEST_CASE("measure pairs are absolutely continuous by construction") {
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    bool finite_mu = i % 2 == 0;
    TwoMeasures m = random_abs_continuous_pair(rng, finite_mu);
    CHECK(check_abs_continuity(m));
    if (finite_mu) CHECK(m.mu().total().is_finite());
  }
}

TEST_CASE("layer families nest") {
  Rng rng(19);
  for (int i = 0; i < 100; ++i) {
    WeightedSpace sp = random_space(rng);
    auto layers = random_nested_layers(rng, sp);
    REQUIRE(!layers.empty());
    for (std::size_t k = 1; k < layers.size(); ++k)
      CHECK(layers[k].set.contains(layers[k - 1].set));
    for (const auto& l : layers) CHECK(sp.measure(l.set).is_finite());
  }
}
