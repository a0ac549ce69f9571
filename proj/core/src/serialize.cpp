#include "rihull/serialize.hpp"

#include "rihull/errors.hpp"

namespace rihull {

void to_json(Json& j, const Rat& q) { j = q.str(); }

void to_json(Json& j, const ExtScalar& s) { j = s.str(); }

void to_json(Json& j, const Interval& iv) {
  j = Json::object();
  j["lo"] = iv.lo ? iv.lo->str() : "-inf";
  j["hi"] = iv.hi ? iv.hi->str() : "inf";
}

void to_json(Json& j, const StepFunction& f) {
  j = Json::object();
  j["domain"] = f.domain();
  Json breaks = Json::array();
  for (const auto& b : f.breaks()) breaks.push_back(b.str());
  j["breaks"] = std::move(breaks);
  Json values = Json::array();
  for (const auto& v : f.values()) values.push_back(v.str());
  j["values"] = std::move(values);
}

void to_json(Json& j, const WeightedSpace& sp) {
  j = Json::object();
  j["density"] = sp.density();
}

void to_json(Json& j, const Monomial& m) {
  j = Json::object();
  j["interval"] = m.iv;
  j["coeff"] = m.coeff.str();
  j["scale"] = m.scale.str();
  j["exponent"] = m.exponent.str();
}

void to_json(Json& j, const PowerTail& w) {
  Json pieces = Json::array();
  for (const auto& m : w.pieces()) pieces.push_back(m);
  j = Json::object();
  j["pieces"] = std::move(pieces);
}

void to_json(Json& j, const Value& v) {
  j = Json::object();
  if (v.is_exact()) {
    j["kind"] = "exact";
    j["value"] = v.exact().str();
  } else {
    j["kind"] = "enclosure";
    j["lo"] = v.enclosure().lo.str();
    j["hi"] = v.enclosure().hi.str();
    j["approx"] = v.to_double();
  }
}

Rat parse_rat(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    auto q = Rat::parse(j.get<std::string>());
    if (q) return *q;
  }
  throw parse_error("expected a rational literal, got " + j.dump());
}

ExtScalar parse_ext(const Json& j) {
  if (j.is_number_integer()) return ExtScalar(Rat(j.get<long>()));
  if (j.is_string()) {
    auto s = ExtScalar::parse(j.get<std::string>());
    if (s) return *s;
  }
  throw parse_error("expected a rational literal or inf, got " + j.dump());
}

namespace {

std::optional<Rat> parse_endpoint(const Json& j, bool lower) {
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    if (lower && text == "-inf") return std::nullopt;
    if (!lower && text == "inf") return std::nullopt;
  }
  return parse_rat(j);
}

}  // namespace

Interval parse_interval(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw parse_error("interval array needs two endpoints");
    return Interval(parse_endpoint(j[0], true), parse_endpoint(j[1], false));
  }
  if (!j.is_object() || !j.contains("lo") || !j.contains("hi"))
    throw parse_error("interval needs lo and hi");
  return Interval(parse_endpoint(j["lo"], true), parse_endpoint(j["hi"], false));
}

StepFunction parse_step(const Json& j) {
  if (!j.is_object() || !j.contains("domain")) throw parse_error("step function needs a domain");
  Interval dom = parse_interval(j["domain"]);
  if (j.contains("constant")) return StepFunction::constant(dom, parse_ext(j["constant"]));
  std::vector<Rat> breaks;
  if (j.contains("breaks"))
    for (const auto& b : j["breaks"]) breaks.push_back(parse_rat(b));
  std::vector<ExtScalar> values;
  if (!j.contains("values")) throw parse_error("step function needs values");
  for (const auto& v : j["values"]) values.push_back(parse_ext(v));
  return StepFunction(dom, std::move(breaks), std::move(values));
}

WeightedSpace parse_space(const Json& j) {
  if (j.is_object() && j.contains("density")) return WeightedSpace(parse_step(j["density"]));
  return WeightedSpace(parse_step(j));
}

PowerTail parse_powertail(const Json& j) {
  const Json& arr = (j.is_object() && j.contains("pieces")) ? j["pieces"] : j;
  if (!arr.is_array()) throw parse_error("monomial weight needs a piece array");
  std::vector<Monomial> pieces;
  for (const auto& pj : arr) {
    if (!pj.is_object() || !pj.contains("interval") || !pj.contains("coeff") ||
        !pj.contains("exponent"))
      throw parse_error("monomial needs interval, coeff, exponent");
    Monomial m{parse_interval(pj["interval"]), parse_rat(pj["coeff"]),
               pj.contains("scale") ? parse_rat(pj["scale"]) : Rat(1), parse_rat(pj["exponent"])};
    pieces.push_back(std::move(m));
  }
  return PowerTail(std::move(pieces));
}

void to_json(Json& j, const InequalityReport& r) {
  j = Json::object();
  j["lhs"] = r.lhs.str();
  j["rhs"] = r.rhs.str();
  j["holds"] = r.holds;
  j["slack"] = r.slack.str();
}

void to_json(Json& j, const ChainReport& r) {
  j = Json::object();
  j["direct"] = r.direct.str();
  j["middle"] = r.middle.str();
  j["rhs"] = r.rhs.str();
  j["holds"] = r.holds;
}

void to_json(Json& j, const SandwichReport& r) {
  j = Json::object();
  j["lower"] = r.lower.str();
  j["middle"] = r.middle.str();
  j["upper"] = r.upper.str();
  j["holds"] = r.holds;
}

void to_json(Json& j, const RyffVerdict& r) {
  j = Json::object();
  j["case"] = to_string(r.tag);
  j["esssup"] = r.top.str();
  j["kappa_at_top"] = r.kappa_at_top.str();
  j["top_mass"] = r.top_mass.str();
  j["witness"] = r.witness ? Json(r.witness->str()) : Json(nullptr);
}

void to_json(Json& j, const AffinePiece& p) {
  j = Json::object();
  j["source"] = p.source;
  j["offset"] = p.offset.str();
  j["slope"] = p.slope.str();
  j["target"] = p.target();
}

void to_json(Json& j, const MPTransform& t) {
  Json pieces = Json::array();
  for (const auto& p : t.pieces) pieces.push_back(p);
  j = Json::object();
  j["domain"] = t.domain;
  j["pieces"] = std::move(pieces);
}

void to_json(Json& j, const MptCheck& c) {
  j = Json::object();
  j["ok"] = c.ok;
  j["diagnostic"] = c.diagnostic;
}

void to_json(Json& j, const EmbeddingResult& r) {
  j = Json::object();
  j["absolutely_continuous"] = r.absolutely_continuous;
  j["p"] = r.p.str();
  j["pprime"] = r.pprime ? Json(r.pprime->str()) : Json(nullptr);
  j["A_pow_pprime"] = r.A_pow_pprime;
  j["A"] = r.A;
  j["embeds"] = r.embeds;
  j["budget"] = r.budget.str();
  j["level_threshold"] = r.level_threshold.str();
}

void to_json(Json& j, const CorollaryReport& r) {
  j = Json::object();
  j["k_norm"] = r.k_norm;
  j["finite"] = r.finite;
  j["a_pow_pprime"] = r.a_pow_pprime;
  j["identity_holds"] = r.identity_holds;
}

void to_json(Json& j, const WitnessReport& r) {
  j = Json::object();
  j["case"] = to_string(r.tag);
  j["epsilon"] = r.epsilon_used.str();
  j["equimeasurable"] = r.equimeasurable_with_g;
  j["lambda_pow_p"] = r.lambda_pow_p;
  j["lp_pow_p"] = r.lp_pow_p;
  j["lambda_norm"] = r.lambda_norm;
  j["lp_norm"] = r.lp_norm;
  j["sandwich_holds"] = r.sandwich_holds;
  j["witness"] = r.f;
}

void to_json(Json& j, const BpReport& r) {
  j = Json::object();
  j["in_class"] = r.in_class;
  j["constant"] = r.constant;
  j["exact_constant"] = r.exact_constant;
  j["near0_exponent"] = r.near0_exponent.str();
  j["tail_exponent"] = r.tail_exponent.str();
  j["critical"] = r.critical.str();
  Json grid = Json::array();
  for (const auto& q : r.checked_grid) grid.push_back(q.str());
  j["checked_grid"] = std::move(grid);
}

void to_json(Json& j, const LorentzIdentityReport& r) {
  j = Json::object();
  j["q"] = r.q.str();
  j["exponent_identity"] = r.exponent_identity;
  j["integrand_match"] = r.integrand_match;
  j["scaling_match"] = r.scaling_match;
  j["lambda_pow_plain"] = r.lambda_pow_plain;
  j["lambda_pow_scaled"] = r.lambda_pow_scaled;
}

void to_json(Json& j, const BanachChainReport& r) {
  j = Json::object();
  j["bp_ok"] = r.bp_ok;
  j["checked"] = r.checked;
  j["first_inclusion_ok"] = r.first_inclusion_ok;
  j["second_inclusion_ok"] = r.second_inclusion_ok;
}

const StepFunction* Scenario::find(const std::string& name) const {
  for (const auto& [n, f] : functions)
    if (n == name) return &f;
  return nullptr;
}

Scenario parse_scenario(const Json& j) {
  if (!j.is_object()) throw parse_error("scenario must be an object");
  Scenario s;
  if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("cases")) s.cases = j["cases"].get<std::size_t>();
  if (j.contains("grid")) s.grid = j["grid"].get<std::size_t>();
  if (j.contains("p")) s.p = parse_rat(j["p"]);
  if (j.contains("epsilon")) s.epsilon = parse_rat(j["epsilon"]);
  if (j.contains("space")) s.space = parse_space(j["space"]);
  if (j.contains("functions")) {
    const Json& fj = j["functions"];
    if (fj.is_array()) {
      for (const auto& e : fj) {
        if (!e.is_object() || !e.contains("name")) throw parse_error("function entry needs a name");
        s.functions.emplace_back(e["name"].get<std::string>(), parse_step(e));
      }
    } else if (fj.is_object()) {
      for (const auto& [name, fe] : fj.items()) s.functions.emplace_back(name, parse_step(fe));
    } else {
      throw parse_error("functions must be named step functions");
    }
  }
  if (j.contains("weight")) s.weight = parse_step(j["weight"]);
  if (j.contains("power_weight")) s.power_weight = parse_powertail(j["power_weight"]);
  return s;
}

void to_json(Json& j, const Scenario& s) {
  j = Json::object();
  j["seed"] = s.seed;
  j["cases"] = s.cases;
  j["grid"] = s.grid;
  j["p"] = s.p.str();
  j["epsilon"] = s.epsilon.str();
  if (s.space) j["space"] = *s.space;
  if (!s.functions.empty()) {
    Json fs = Json::object();
    for (const auto& [name, f] : s.functions) fs[name] = f;
    j["functions"] = std::move(fs);
  }
  if (s.weight) j["weight"] = *s.weight;
  if (s.power_weight) j["power_weight"] = *s.power_weight;
}

}  // namespace rihull
