// Scenario-driven front end. Every subcommand reads a JSON scenario, runs the
// corresponding exact computation, prints one JSON report to stdout, and exits
// 0 when all assertions in the report hold, 1 when one fails, 2 on bad input.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rihull/bp.hpp"
#include "rihull/embedding.hpp"
#include "rihull/errors.hpp"
#include "rihull/hull.hpp"
#include "rihull/inequalities.hpp"
#include "rihull/mpt.hpp"
#include "rihull/oracle.hpp"
#include "rihull/rearrangement.hpp"
#include "rihull/serialize.hpp"
#include "rihull/verify.hpp"

namespace {

using namespace rihull;

struct Overrides {
  std::string scenario_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> cases;
  std::optional<std::size_t> grid;
  std::string csv_dir;
  std::optional<std::string> epsilon;
  std::optional<std::string> p;
};

Scenario load_scenario(const Overrides& o, bool need_file) {
  Scenario s;
  if (!o.scenario_path.empty()) {
    std::ifstream in(o.scenario_path);
    if (!in) throw parse_error("cannot open scenario file: " + o.scenario_path);
    s = parse_scenario(Json::parse(in));
  } else if (need_file) {
    throw parse_error("this command needs --scenario");
  }
  if (o.seed) s.seed = *o.seed;
  if (o.cases) s.cases = *o.cases;
  if (o.grid) s.grid = *o.grid;
  auto rat_flag = [](const std::string& text, const char* what) {
    auto q = Rat::parse(text);
    if (!q) throw parse_error(std::string("bad rational for ") + what + ": " + text);
    return *q;
  };
  if (o.epsilon) s.epsilon = rat_flag(*o.epsilon, "--epsilon");
  if (o.p) s.p = rat_flag(*o.p, "--p");
  return s;
}

// Emit a step function and prove the emission re-parses to an equal object.
Json step_json_checked(const StepFunction& f) {
  Json j = f;
  if (!(parse_step(j) == f)) throw error("serialization round trip failed");
  return j;
}

void csv_dump(const std::string& dir, const std::string& name, const StepFunction& f) {
  std::string path = dir + "/" + name + ".csv";
  std::ofstream out(path);
  if (!out) throw error("cannot write " + path);
  out << "x,value\n";
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    Interval iv = f.piece(i);
    out << (iv.lo ? iv.lo->str() : "-inf") << "," << f.value(i).str() << "\n";
  }
}

int emit(const Json& out, bool ok) {
  std::cout << out.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_rearrange(const Scenario& scn, const std::string& csv) {
  if (!scn.space || scn.functions.empty())
    throw parse_error("rearrange needs a space and at least one function");
  const WeightedSpace& sp = *scn.space;
  Json out;
  out["command"] = "rearrange";
  out["space"] = sp;
  bool ok = true;
  Json fns = Json::array();
  for (const auto& [name, f] : scn.functions) {
    Json e;
    e["name"] = name;
    e["function"] = step_json_checked(f);
    e["esssup"] = esssup(f, sp);
    StepFunction mu = distribution(f, sp);
    StepFunction kappa = lower_distribution(f, sp);
    StepFunction fstar = decreasing_rearrangement(f, sp);
    StepFunction flow = increasing_rearrangement(f, sp);
    e["distribution"] = step_json_checked(mu);
    e["lower_distribution"] = step_json_checked(kappa);
    e["decreasing"] = step_json_checked(fstar);
    e["increasing"] = step_json_checked(flow);
    bool equi = equimeasurable(f, sp, fstar, WeightedSpace::lebesgue(fstar.domain()));
    bool layer = layer_cake_check(f, sp);
    e["equimeasurable"] = equi;
    e["layer_cake"] = layer;
    bool refl = true;
    if (sp.total().is_finite()) {
      refl = finite_space_duality_check(f, sp);
      e["reflection"] = refl;
    }
    ok = ok && equi && layer && refl;
    if (!csv.empty()) {
      csv_dump(csv, name, f);
      csv_dump(csv, name + ".distribution", mu);
      csv_dump(csv, name + ".lower-distribution", kappa);
      csv_dump(csv, name + ".decreasing", fstar);
      csv_dump(csv, name + ".increasing", flow);
    }
    fns.push_back(e);
  }
  out["functions"] = fns;
  out["ok"] = ok;
  return emit(out, ok);
}

int cmd_norms(const Scenario& scn, const std::string& csv) {
  if (!scn.space || scn.functions.empty())
    throw parse_error("norms needs a space and at least one function");
  const WeightedSpace& sp = *scn.space;
  StepFunction w = scn.weight ? *scn.weight
                              : StepFunction::constant(sp.domain(), ExtScalar(Rat(1)));
  StepFunction w_low = increasing_rearrangement(w, sp);
  Json out;
  out["command"] = "norms";
  out["p"] = scn.p;
  out["weight"] = step_json_checked(w);
  bool ok = true;
  Json fns = Json::array();
  for (const auto& [name, f] : scn.functions) {
    Json e;
    e["name"] = name;
    Value lpp = weighted_lp_pow_p(f, sp, w, scn.p);
    Value lam = halfline_lambda_pow_p(decreasing_rearrangement(f, sp), w_low, scn.p);
    e["lp_pow_p"] = lpp;
    e["lp_norm"] = weighted_lp_norm(f, sp, w, scn.p);
    e["lambda_pow_p"] = lam;
    e["k_norm"] = ExtScalar(l1_plus_linf_norm(f, sp));
    bool lower = Value::le_within_error(lam, lpp);
    e["lambda_le_lp"] = lower;
    ok = ok && lower;
    if (!csv.empty()) csv_dump(csv, name, f);
    fns.push_back(e);
  }
  out["functions"] = fns;
  Json pairs = Json::array();
  for (std::size_t i = 0; i < scn.functions.size(); ++i)
    for (std::size_t j = i + 1; j < scn.functions.size(); ++j) {
      const auto& [ni, fi] = scn.functions[i];
      const auto& [nj, fj] = scn.functions[j];
      Json e;
      e["pair"] = ni + "," + nj;
      InequalityReport fwd = hardy_littlewood(fi, fj, sp);
      InequalityReport rev = reverse_hardy_littlewood(fi, fj, sp);
      SandwichReport both = hl_sandwich(fi, fj, sp);
      e["hardy_littlewood"] = fwd;
      e["reverse"] = rev;
      e["sandwich"] = both;
      ok = ok && fwd.holds && rev.holds && both.holds;
      pairs.push_back(e);
    }
  out["pairs"] = pairs;
  out["ok"] = ok;
  return emit(out, ok);
}

int cmd_ryff(const Scenario& scn) {
  if (!scn.space || scn.functions.empty())
    throw parse_error("ryff needs a space and at least one function");
  const WeightedSpace& sp = *scn.space;
  Json out;
  out["command"] = "ryff";
  bool ok = true;
  Json fns = Json::array();
  for (const auto& [name, f] : scn.functions) {
    Json e;
    e["name"] = name;
    RyffVerdict v = ryff_conditions(f, sp);
    e["verdict"] = v;
    if (v.tag == RyffCase::Neither) {
      StepFunction flow = increasing_rearrangement(f, sp);
      bool strict = true;
      for (const auto& val : flow.values())
        if (!(val < ExtScalar(*v.witness))) strict = false;
      e["certified"] = strict;
      ok = ok && strict;
    } else {
      MPTransform sigma = build_increasing_mpt(f, sp);
      MptCheck ck = verify_mpt(sigma, sp);
      bool comp =
          equal_mu_ae(f, compose_with_rearrangement(increasing_rearrangement(f, sp), sigma), sp);
      e["transform"] = sigma;
      e["check"] = ck;
      e["composition_ok"] = comp;
      ok = ok && ck.ok && comp;
    }
    fns.push_back(e);
  }
  out["functions"] = fns;
  out["ok"] = ok;
  return emit(out, ok);
}

int cmd_embed(const Scenario& scn, const std::string& csv) {
  const StepFunction* mu = scn.find("mu");
  const StepFunction* nu = scn.find("nu");
  if (!mu || !nu) throw parse_error("embed needs densities named \"mu\" and \"nu\"");
  Interval dom = scn.space ? scn.space->domain() : mu->domain();
  TwoMeasures m(dom, *mu, *nu);
  std::vector<StepFunction> samples;
  std::vector<std::string> sample_names;
  for (const auto& [name, f] : scn.functions)
    if (name != "mu" && name != "nu") {
      samples.push_back(f);
      sample_names.push_back(name);
    }
  EmbeddingVerification ver = verify_embedding_norm(m, scn.p, samples);
  Json out;
  out["command"] = "embed";
  out["result"] = ver.result;
  Json checks = Json::array();
  for (std::size_t i = 0; i < ver.samples.size(); ++i) {
    Json e;
    e["name"] = sample_names[i];
    e["lhs"] = ver.samples[i].lhs;
    e["rhs"] = ver.samples[i].rhs;
    e["ok"] = ver.samples[i].ok;
    checks.push_back(e);
  }
  out["samples"] = checks;
  out["extremal"] = step_json_checked(ver.extremal);
  out["extremal_ratio"] = ver.extremal_ratio;
  out["extremal_attains"] = ver.extremal_attains;
  double searched = bathtub_search(m, scn.p, scn.grid);
  out["search_A"] = searched;
  double exact_a = ver.result.A.to_double();
  bool search_agrees =
      std::abs(exact_a - searched) <= 1e-3 * std::max(std::abs(exact_a), 1e-6);
  out["search_agrees"] = search_agrees;
  bool ok = ver.all_samples_ok && (!ver.result.embeds || ver.extremal_attains) && search_agrees;
  out["ok"] = ok;
  if (!csv.empty()) csv_dump(csv, "extremal", ver.extremal);
  return emit(out, ok);
}

int cmd_hull(const Scenario& scn, const std::string& csv) {
  if (scn.functions.empty()) throw parse_error("hull needs at least one function");
  Json out;
  out["command"] = "hull";
  out["p"] = scn.p;
  out["epsilon"] = scn.epsilon;
  bool ok = true;
  Json fns = Json::array();
  if (scn.power_weight) {
    out["weight"] = *scn.power_weight;
    for (const auto& [name, g] : scn.functions) {
      Json e;
      e["name"] = name;
      StepFunction g_star =
          decreasing_rearrangement(g, WeightedSpace::lebesgue(g.domain()));
      WitnessReport wit = hull_witness_powertail(g_star, *scn.power_weight, scn.p, scn.epsilon);
      e["witness"] = wit;
      ok = ok && wit.equimeasurable_with_g && wit.sandwich_holds;
      if (!csv.empty()) csv_dump(csv, name + ".witness", wit.f);
      fns.push_back(e);
    }
  } else {
    if (!scn.space || !scn.weight)
      throw parse_error("hull needs a space and a weight (step or power-tail)");
    HullInstance inst(*scn.space, *scn.weight, scn.p);
    Json ij;
    ij["T"] = inst.T;
    ij["S"] = inst.S;
    ij["kappa_S"] = inst.kappa_S;
    ij["weight_rearranged"] = step_json_checked(inst.v_low);
    ij["zero_set_infinite"] = inst.vstar_zero;
    out["instance"] = ij;
    for (const auto& [name, g] : scn.functions) {
      Json e;
      e["name"] = name;
      InequalityReport lower = hull_lower_bound(g, inst);
      e["lower_bound"] = lower;
      ok = ok && lower.holds;
      if (!(inst.space.total() == ExtScalar(Rat(0)))) {
        StepFunction g_star = decreasing_rearrangement(g, inst.space);
        try {
          WitnessReport wit = inst.vstar_zero
                                  ? hull_witness_degenerate(g_star, inst, scn.epsilon)
                                  : hull_witness(g_star, inst, scn.epsilon);
          e["witness"] = wit;
          ok = ok && wit.equimeasurable_with_g && wit.sandwich_holds;
          if (!csv.empty()) csv_dump(csv, name + ".witness", wit.f);
        } catch (const epsilon_zero_not_available&) {
          e["witness"] = nullptr;
          e["witness_note"] = "an exact witness needs a value-ordered transform for the weight";
        }
      }
      fns.push_back(e);
    }
  }
  out["functions"] = fns;
  out["ok"] = ok;
  return emit(out, ok);
}

int cmd_bp(const Scenario& scn) {
  PowerTail w = scn.power_weight
                    ? *scn.power_weight
                    : (scn.weight ? PowerTail::from_step(*scn.weight)
                                  : throw parse_error("bp needs a weight (step or power-tail)"));
  BpReport rep = bp_check(w, scn.p);
  Json out;
  out["command"] = "bp";
  out["p"] = scn.p;
  out["weight"] = w;
  out["report"] = rep;
  bool ok = true;
  if (rep.in_class) {
    Json spots = Json::array();
    for (const Rat& r : rep.checked_grid) {
      Value q = bp_ratio_at(w, scn.p, r);
      bool below = Value::le_within_error(q, rep.constant);
      Json e;
      e["r"] = r;
      e["ratio"] = q;
      e["below_constant"] = below;
      spots.push_back(e);
      ok = ok && below;
    }
    out["spot_checks"] = spots;
  }
  out["ok"] = ok;
  return emit(out, ok);
}

Json criterion_json(const CriterionResult& c) {
  Json e;
  e["name"] = c.name;
  e["cases"] = c.cases;
  e["failures"] = c.failures;
  e["seconds"] = c.seconds;
  e["notes"] = c.notes;
  e["passed"] = c.passed();
  return e;
}

int cmd_verify(const Scenario& scn) {
  std::size_t n = scn.cases;
  auto at_least = [](std::size_t v, std::size_t floor_) { return v < floor_ ? floor_ : v; };
  std::vector<CriterionResult> results;
  results.push_back(verify_rearrangement_axioms(scn.seed, n));
  results.push_back(verify_monotone_chains(scn.seed + 1, at_least(n / 10, 1)));
  results.push_back(verify_transform_construction(scn.seed + 2, at_least(n / 10, 1)));
  results.push_back(verify_reverse_inequality(scn.seed + 3, n));
  results.push_back(verify_embedding_campaign(scn.seed + 4, at_least(n / 50, 2)));
  results.push_back(verify_hull_campaign(scn.seed + 5, n, at_least(n / 20, 4)));
  results.push_back(verify_weight_class_grid(scn.seed + 6));
  results.push_back(
      verify_oracle_differential(scn.seed + 7, at_least(n / 200, 3), scn.grid));
  Json out;
  out["command"] = "verify";
  out["seed"] = scn.seed;
  out["cases"] = n;
  bool ok = true;
  Json arr = Json::array();
  for (const auto& c : results) {
    arr.push_back(criterion_json(c));
    ok = ok && c.passed();
  }
  out["criteria"] = arr;
  out["ok"] = ok;
  return emit(out, ok);
}

int cmd_oracle_diff(const Scenario& scn) {
  CriterionResult c = verify_oracle_differential(scn.seed, scn.cases, scn.grid);
  Json out;
  out["command"] = "oracle-diff";
  out["seed"] = scn.seed;
  out["criterion"] = criterion_json(c);
  out["ok"] = c.passed();
  return emit(out, c.passed());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rearrangements, embedding constants, and hull witnesses"};
  app.require_subcommand(1);
  Overrides o;
  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--scenario", o.scenario_path, "scenario file (JSON)");
    sub->add_option("--seed", o.seed, "override the scenario seed");
    sub->add_option("--cases", o.cases, "override the scenario case count");
    sub->add_option("--grid", o.grid, "override the oracle grid size");
    sub->add_option("--csv", o.csv_dir, "directory for plot-ready step-function tables");
    sub->add_option("--epsilon", o.epsilon, "override epsilon, rational literal");
    sub->add_option("--p", o.p, "override the exponent p, rational literal");
    return sub;
  };
  auto* c_rearrange = add_common(
      app.add_subcommand("rearrange", "distributions and rearrangements of named functions"));
  auto* c_norms =
      add_common(app.add_subcommand("norms", "weighted norms, functionals, and pairing bounds"));
  auto* c_ryff =
      add_common(app.add_subcommand("ryff", "value-ordered transforms or impossibility proofs"));
  auto* c_embed =
      add_common(app.add_subcommand("embed", "optimal constant of L^p(nu) into (L^1+L^inf)(mu)"));
  auto* c_hull = add_common(
      app.add_subcommand("hull", "lower bounds and equimeasurable witnesses for the hull"));
  auto* c_bp = add_common(app.add_subcommand("bp", "averaging-class membership and constant"));
  auto* c_verify =
      add_common(app.add_subcommand("verify", "run the randomized verification campaigns"));
  auto* c_oracle =
      add_common(app.add_subcommand("oracle-diff", "differential test against the grid oracle"));

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_rearrange->parsed()) return cmd_rearrange(load_scenario(o, true), o.csv_dir);
    if (c_norms->parsed()) return cmd_norms(load_scenario(o, true), o.csv_dir);
    if (c_ryff->parsed()) return cmd_ryff(load_scenario(o, true));
    if (c_embed->parsed()) return cmd_embed(load_scenario(o, true), o.csv_dir);
    if (c_hull->parsed()) return cmd_hull(load_scenario(o, true), o.csv_dir);
    if (c_bp->parsed()) return cmd_bp(load_scenario(o, true));
    if (c_verify->parsed()) return cmd_verify(load_scenario(o, false));
    if (c_oracle->parsed()) return cmd_oracle_diff(load_scenario(o, false));
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
