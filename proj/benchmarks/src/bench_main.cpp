// Microbenchmarks for the exact pipeline: rearranging, norm evaluation,
// witness construction, and the floating grid search they are checked against.
#include <benchmark/benchmark.h>

#include <vector>

#include "rihull/embedding.hpp"
#include "rihull/generators.hpp"
#include "rihull/hull.hpp"
#include "rihull/oracle.hpp"
#include "rihull/rearrangement.hpp"

using namespace rihull;

namespace {

std::vector<SpaceAndFunction> sample_instances(std::size_t n) {
  Rng rng(2026);
  std::vector<SpaceAndFunction> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    WeightedSpace sp = random_space(rng);
    StepOptions opt;
    opt.zero_tails = true;
    StepFunction f = random_step(rng, sp.domain(), opt);
    out.push_back({sp, f});
  }
  return out;
}

void bm_decreasing_rearrangement(benchmark::State& state) {
  auto instances = sample_instances(64);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& inst = instances[i++ % instances.size()];
    benchmark::DoNotOptimize(decreasing_rearrangement(inst.f, inst.space));
  }
}
BENCHMARK(bm_decreasing_rearrangement);

void bm_weighted_norm(benchmark::State& state) {
  Rng rng(7);
  WeightedSpace sp = random_space(rng, DomainKind::Bounded, true);
  StepOptions opt;
  opt.ensure_positive = true;
  StepFunction f = random_step(rng, sp.domain(), opt);
  StepFunction v = random_step(rng, sp.domain(), opt);
  Rat p(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(weighted_lp_pow_p(f, sp, v, p));
}
BENCHMARK(bm_weighted_norm);

void bm_hull_witness(benchmark::State& state) {
  Rng rng(11);
  WeightedSpace sp = random_space(rng, DomainKind::Bounded, true);
  StepOptions opt;
  opt.ensure_positive = true;
  StepFunction v = random_step(rng, sp.domain(), opt);
  HullInstance inst(sp, v, Rat(2));
  StepFunction f = random_step(rng, sp.domain(), opt);
  StepFunction g_star = decreasing_rearrangement(f, sp);
  for (auto _ : state)
    benchmark::DoNotOptimize(hull_witness(g_star, inst, Rat(1, 10)));
}
BENCHMARK(bm_hull_witness);

void bm_embedding_constant(benchmark::State& state) {
  Rng rng(13);
  TwoMeasures m = random_abs_continuous_pair(rng, true);
  for (auto _ : state) benchmark::DoNotOptimize(embedding_constant(m, Rat(2)));
}
BENCHMARK(bm_embedding_constant);

void bm_bathtub_search(benchmark::State& state) {
  Rng rng(13);
  TwoMeasures m = random_abs_continuous_pair(rng, true);
  for (auto _ : state)
    benchmark::DoNotOptimize(bathtub_search(m, Rat(2), static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(bm_bathtub_search)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
