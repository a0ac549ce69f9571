#include "doctest.h"
#include "rihull/errors.hpp"
#include "rihull/inequalities.hpp"
#include "test_helpers.hpp"

using namespace rihull;
using th::iv;
using th::leb;
using th::steps;

TEST_CASE("the paired two-piece example, both directions") {
  WeightedSpace sp = leb(iv(0, 1));
  StepFunction f = steps(iv(0, 1), {Rat(1, 2)}, {Rat(1), Rat(3)});
  InequalityReport fwd = hardy_littlewood(f, f, sp);
  CHECK(fwd.holds);
  CHECK(fwd.lhs == ExtScalar(Rat(5)));
  CHECK(fwd.rhs == ExtScalar(Rat(5)));  // equality for f paired with itself
  InequalityReport rev = reverse_hardy_littlewood(f, f, sp);
  CHECK(rev.holds);
  CHECK(rev.lhs == ExtScalar(Rat(5)));
  CHECK(rev.rhs == ExtScalar(Rat(3)));
  CHECK(rev.slack == ExtScalar(Rat(2)));
  SandwichReport s = hl_sandwich(f, f, sp);
  CHECK(s.holds);
  CHECK(s.middle == ExtScalar(Rat(5)));
}

TEST_CASE("disjoint supports push the pairing to zero") {
  WeightedSpace sp = leb(iv(0, 2));
  StepFunction f = steps(iv(0, 2), {Rat(1)}, {Rat(2), Rat(0)});
  StepFunction g = steps(iv(0, 2), {Rat(1)}, {Rat(0), Rat(3)});
  InequalityReport fwd = hardy_littlewood(f, g, sp);
  CHECK(fwd.lhs == ExtScalar(Rat(0)));
  CHECK(fwd.holds);
  CHECK(reverse_hardy_littlewood(f, g, sp).rhs == ExtScalar(Rat(0)));
}

TEST_CASE("bounded support on an infinite space kills the reverse side") {
  WeightedSpace half = leb(Interval::positive_halfline());
  StepFunction g = steps(Interval::positive_halfline(), {Rat(2)}, {Rat(1), Rat(0)});
  StepFunction f = steps(Interval::positive_halfline(), {Rat(1)}, {Rat(5), Rat(2)});
  InequalityReport rev = reverse_hardy_littlewood(f, g, half);
  CHECK(rev.rhs == ExtScalar(Rat(0)));
  CHECK(rev.holds);
}

TEST_CASE("the constant-one specialization is an equality on finite spaces") {
  WeightedSpace sp(steps(iv(0, 2), {Rat(1)}, {Rat(1), Rat(3)}));
  StepFunction one = StepFunction::constant(iv(0, 2), ExtScalar(Rat(1)));
  StepFunction g = steps(iv(0, 2), {Rat(1, 2)}, {Rat(4), Rat(1)});
  InequalityReport rev = reverse_hardy_littlewood(one, g, sp);
  CHECK(rev.holds);
  CHECK(rev.lhs == rev.rhs);
}

TEST_CASE("the nested-layer chain holds with exact links") {
  WeightedSpace sp = leb(iv(0, 2));
  StepFunction g = steps(iv(0, 2), {Rat(1)}, {Rat(2), Rat(1)});
  std::vector<SimpleLayer> layers = {{Rat(1), Interval::bounded(Rat(1, 2), Rat(1))},
                                     {Rat(3), Interval::bounded(Rat(0), Rat(3, 2))}};
  ChainReport ch = reverse_hl_simple_chain(layers, g, sp);
  CHECK(ch.holds);
  CHECK(ch.direct == ExtScalar(Rat(17, 2)));
  CHECK(ch.middle == ExtScalar(Rat(13, 2)));
  CHECK(ch.rhs == ExtScalar(Rat(13, 2)));
}

TEST_CASE("crossing layers are refused") {
  WeightedSpace sp = leb(iv(0, 2));
  StepFunction g = StepFunction::constant(iv(0, 2), ExtScalar(Rat(1)));
  std::vector<SimpleLayer> layers = {{Rat(1), Interval::bounded(Rat(0), Rat(1))},
                                     {Rat(1), Interval::bounded(Rat(1, 2), Rat(2))}};
  CHECK_THROWS_AS(reverse_hl_simple_chain(layers, g, sp), non_nested_layers);
}

TEST_CASE("zero layers collapse the chain") {
  WeightedSpace sp = leb(iv(0, 2));
  StepFunction g = steps(iv(0, 2), {Rat(1)}, {Rat(2), Rat(1)});
  std::vector<SimpleLayer> layers = {{Rat(0), Interval::bounded(Rat(0), Rat(1))}};
  ChainReport ch = reverse_hl_simple_chain(layers, g, sp);
  CHECK(ch.holds);
  CHECK(ch.direct == ExtScalar(Rat(0)));
  CHECK(ch.rhs == ExtScalar(Rat(0)));
}
