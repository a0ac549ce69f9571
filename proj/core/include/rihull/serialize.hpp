#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rihull/bp.hpp"
#include "rihull/embedding.hpp"
#include "rihull/hull.hpp"
#include "rihull/mpt.hpp"

namespace rihull {

// Ordered JSON keeps report field order stable, so equal inputs produce
// byte-identical output.
using Json = nlohmann::ordered_json;

// Exact quantities travel as strings ("3/4", "inf", "-inf"); doubles appear
// only in clearly-labelled approx fields.
void to_json(Json& j, const Rat& v);
void to_json(Json& j, const ExtScalar& v);
void to_json(Json& j, const Interval& v);
void to_json(Json& j, const StepFunction& v);
void to_json(Json& j, const WeightedSpace& v);
void to_json(Json& j, const Monomial& v);
void to_json(Json& j, const PowerTail& v);
void to_json(Json& j, const Value& v);

Rat parse_rat(const Json& j);
ExtScalar parse_ext(const Json& j);
Interval parse_interval(const Json& j);
StepFunction parse_step(const Json& j);
WeightedSpace parse_space(const Json& j);
PowerTail parse_powertail(const Json& j);

void to_json(Json& j, const InequalityReport& v);
void to_json(Json& j, const ChainReport& v);
void to_json(Json& j, const SandwichReport& v);
void to_json(Json& j, const RyffVerdict& v);
void to_json(Json& j, const AffinePiece& v);
void to_json(Json& j, const MPTransform& v);
void to_json(Json& j, const MptCheck& v);
void to_json(Json& j, const EmbeddingResult& v);
void to_json(Json& j, const CorollaryReport& v);
void to_json(Json& j, const WitnessReport& v);
void to_json(Json& j, const BpReport& v);
void to_json(Json& j, const LorentzIdentityReport& v);
void to_json(Json& j, const BanachChainReport& v);

// One self-contained problem description: a space, named step functions,
// an optional weight (step or monomial), and the run parameters.
struct Scenario {
  std::uint64_t seed = 1;
  std::size_t cases = 100;
  std::size_t grid = 100000;
  Rat p{2};
  Rat epsilon{1, 10};
  std::optional<WeightedSpace> space;
  std::vector<std::pair<std::string, StepFunction>> functions;
  std::optional<StepFunction> weight;
  std::optional<PowerTail> power_weight;

  const StepFunction* find(const std::string& name) const;
};

Scenario parse_scenario(const Json& j);
void to_json(Json& j, const Scenario& v);

}  // namespace rihull
