#include "doctest.h"
#include "rihull/errors.hpp"
#include "rihull/serialize.hpp"
#include "test_helpers.hpp"

using namespace rihull;
using th::iv;
using th::steps;

TEST_CASE("rationals and scalars round-trip as exact text") {
  Json j = Rat(-22, 7);
  CHECK(j.get<std::string>() == "-22/7");
  CHECK(parse_rat(j) == Rat(-22, 7));
  Json k = ExtScalar::infinity();
  CHECK(k.get<std::string>() == "inf");
  CHECK(parse_ext(k).is_inf());
  CHECK_THROWS_AS(parse_rat(Json("1/0")), parse_error);
  CHECK_THROWS_AS(parse_rat(Json(1.5)), parse_error);
}

TEST_CASE("intervals accept both spellings") {
  Interval a = Interval::bounded(Rat(0), Rat(2));
  CHECK(parse_interval(Json(a)) == a);
  CHECK(parse_interval(Json::parse(R"(["0","2"])")) == a);
  CHECK(parse_interval(Json::parse(R"({"lo":"-inf","hi":"1"})")) == Interval::below(Rat(1)));
  Json whole = Interval::whole();
  CHECK(whole["lo"].get<std::string>() == "-inf");
  CHECK(whole["hi"].get<std::string>() == "inf");
}

TEST_CASE("step functions re-parse to equal objects") {
  StepFunction f = steps(iv(0, 2), {Rat(1, 2), Rat(1)}, {Rat(3), Rat(0), Rat(7, 5)});
  CHECK(parse_step(Json(f)) == f);
  StepFunction g(Interval::positive_halfline(), {Rat(1)}, {ExtScalar(Rat(1)), ExtScalar::infinity()});
  CHECK(parse_step(Json(g)) == g);
  StepFunction c = parse_step(Json::parse(R"({"domain":["0","1"],"constant":"5"})"));
  CHECK(c == StepFunction::constant(iv(0, 1), ExtScalar(Rat(5))));
}

TEST_CASE("spaces and power weights") {
  WeightedSpace sp(steps(iv(0, 2), {Rat(1)}, {Rat(1), Rat(2)}));
  WeightedSpace back = parse_space(Json(sp));
  CHECK(back.density() == sp.density());
  PowerTail w({Monomial{Interval::bounded(Rat(0), Rat(1)), Rat(1), Rat(2), Rat(1, 2)},
               Monomial{Interval::above(Rat(1)), Rat(3), Rat(1), Rat(-2)}});
  PowerTail round = parse_powertail(Json(w));
  REQUIRE(round.pieces().size() == 2);
  CHECK(round.pieces()[0].scale == Rat(2));
  CHECK(round.pieces()[1].exponent == Rat(-2));
}

TEST_CASE("values tag exactness") {
  Json e = Value(Rat(3, 4));
  CHECK(e["kind"] == "exact");
  CHECK(e["value"] == "3/4");
  Json enc = Value::pow(Value(Rat(2)), Rat(1, 2));
  CHECK(enc["kind"] == "enclosure");
  CHECK(enc.contains("lo"));
  CHECK(enc.contains("hi"));
  CHECK(enc["approx"].get<double>() == doctest::Approx(1.414213562));
}

TEST_CASE("scenarios resolve their parts") {
  Json j = Json::parse(R"({
    "seed": 11,
    "p": "3/2",
    "epsilon": "1/20",
    "space": {"density": {"domain": ["0","2"], "breaks": ["1"], "values": ["1","2"]}},
    "functions": [
      {"name": "f", "domain": ["0","2"], "breaks": ["1/2"], "values": ["1","3"]},
      {"name": "g", "domain": ["0","2"], "constant": "2"}
    ],
    "weight": {"domain": ["0","2"], "constant": "1"},
    "power_weight": [{"interval": ["0","inf"], "coeff": "1", "exponent": "1"}]
  })");
  Scenario s = parse_scenario(j);
  CHECK(s.seed == 11);
  CHECK(s.p == Rat(3, 2));
  CHECK(s.epsilon == Rat(1, 20));
  REQUIRE(s.space.has_value());
  CHECK(s.space->total() == ExtScalar(Rat(3)));
  REQUIRE(s.find("f") != nullptr);
  CHECK(s.find("f")->value_at(Rat(3, 4)) == ExtScalar(Rat(3)));
  CHECK(s.find("missing") == nullptr);
  REQUIRE(s.weight.has_value());
  REQUIRE(s.power_weight.has_value());
  CHECK(s.power_weight->pieces().size() == 1);

  Scenario round = parse_scenario(Json(s));
  CHECK(round.seed == s.seed);
  CHECK(round.functions.size() == s.functions.size());
  CHECK(*round.find("g") == *s.find("g"));
}

TEST_CASE("reports serialize with stable fields") {
  Json r = InequalityReport{ExtScalar(Rat(1)), ExtScalar(Rat(2)), true, ExtScalar(Rat(1))};
  CHECK(r["lhs"] == "1");
  CHECK(r["rhs"] == "2");
  CHECK(r["holds"] == true);
}
