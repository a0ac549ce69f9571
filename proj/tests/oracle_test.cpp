#include <cmath>

#include "doctest.h"
#include "rihull/inequalities.hpp"
#include "rihull/oracle.hpp"
#include "rihull/rearrangement.hpp"
#include "test_helpers.hpp"

using namespace rihull;
using th::iv;
using th::leb;
using th::steps;

TEST_CASE("grid cells align with every breakpoint") {
  WeightedSpace sp(steps(iv(0, 2), {Rat(1)}, {Rat(1), Rat(2)}));
  StepFunction f = steps(iv(0, 2), {Rat(1, 3)}, {Rat(5), Rat(1)});
  GridModel g(sp, {&f}, 50);
  CHECK(g.total_mass() == doctest::Approx(3.0).epsilon(1e-12));
  auto fv = g.sample(f);
  double integral = 0;
  for (std::size_t i = 0; i < g.size(); ++i) integral += fv[i] * g.cell_mass(i);
  // exact value: 5 * 1/3 + 1 * 2/3 + 1 * 2 = 13/3
  CHECK(integral == doctest::Approx(13.0 / 3.0).epsilon(1e-12));
  CHECK(grid_integral(g, fv) == doctest::Approx(13.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("sorting recovers the rearrangement") {
  WeightedSpace sp = leb(iv(0, 1));
  StepFunction f = steps(iv(0, 1), {Rat(1, 2)}, {Rat(1), Rat(3)});
  GridRearrangement r = grid_rearrange(f, sp, 1000);
  CHECK(r.value_at(0.25) == doctest::Approx(3.0));
  CHECK(r.value_at(0.75) == doctest::Approx(1.0));
  CHECK(r.value_at(2.0) == 0.0);
  CHECK(r.total == doctest::Approx(1.0));
}

TEST_CASE("rearranged pairings against the exact engine") {
  WeightedSpace sp(steps(iv(0, 2), {Rat(1)}, {Rat(2), Rat(1)}));
  StepFunction f = steps(iv(0, 2), {Rat(1, 2)}, {Rat(3), Rat(1)});
  StepFunction h = steps(iv(0, 2), {Rat(3, 2)}, {Rat(1), Rat(4)});
  GridModel g(sp, {&f, &h}, 2000);
  auto fv = g.sample(f);
  auto hv = g.sample(h);
  InequalityReport hl = hardy_littlewood(f, h, sp);
  CHECK(grid_pairing(g, fv, hv) == doctest::Approx(hl.lhs.to_double()).epsilon(1e-9));
  double sp_or = star_pairing(grid_rearrange_cells(g, fv), grid_rearrange_cells(g, hv));
  CHECK(sp_or == doctest::Approx(hl.rhs.to_double()).epsilon(1e-9));
}

TEST_CASE("power norms on the grid") {
  WeightedSpace sp = leb(iv(0, 2));
  StepFunction f = steps(iv(0, 2), {Rat(1)}, {Rat(2), Rat(1)});
  StepFunction w = steps(iv(0, 2), {Rat(1)}, {Rat(1), Rat(3)});
  GridModel g(sp, {&f, &w}, 500);
  // exact: 2^2*1*1 + 1^2*3*1 = 7
  CHECK(grid_power_norm(g, g.sample(f), g.sample(w), 2.0) == doctest::Approx(7.0).epsilon(1e-12));
}

TEST_CASE("truncated K-functional") {
  WeightedSpace sp = leb(iv(0, 2));
  StepFunction f = steps(iv(0, 2), {Rat(1, 2)}, {Rat(3), Rat(1)});
  GridRearrangement r = grid_rearrange(f, sp, 4000);
  CHECK(grid_k_functional(r, 1.0) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(grid_k_functional(r, 0.25) == doctest::Approx(0.75).epsilon(1e-9));
}

TEST_CASE("greedy set search matches the frozen instances") {
  Interval half = Interval::positive_halfline();
  StepFunction one = StepFunction::constant(half, ExtScalar(Rat(1)));
  TwoMeasures same(half, one, one);
  CHECK(bathtub_search(same, Rat(2), 1000) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bathtub_search_exact(same, Rat(2)) == Rat(1));

  TwoMeasures quarter(half, one, steps(half, {Rat(1)}, {Rat(4), Rat(1)}));
  CHECK(bathtub_search(quarter, Rat(2), 100000) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(bathtub_search_exact(quarter, Rat(2)) == Rat(1));
  CHECK(bathtub_search_exact(quarter, Rat(3, 2)) == Rat(1));  // conjugate shift 2

  Interval dom = Interval::bounded(Rat(0), Rat(1, 2));
  StepFunction small = StepFunction::constant(dom, ExtScalar(Rat(1)));
  TwoMeasures tiny(dom, small, small);
  CHECK(bathtub_search_exact(tiny, Rat(2)) == Rat(1, 2));  // budget-limited

  CHECK(bathtub_search(quarter, Rat(1), 1000) == doctest::Approx(1.0));  // sup of the quotient
  CHECK_THROWS(bathtub_search_exact(quarter, Rat(3)));  // conjugate shift 1/2 not an integer
}
