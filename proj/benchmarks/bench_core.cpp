#include <benchmark/benchmark.h>

#include "tschsim/engine.hpp"
#include "tschsim/matching.hpp"
#include "tschsim/rng.hpp"
#include "tschsim/schedulers.hpp"
#include "tschsim/topology.hpp"

using namespace tschsim;

namespace {

WeightMatrix random_square(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  WeightMatrix w(n, std::vector<double>(n, 0.0));
  for (auto& row : w)
    for (double& x : row) x = rng.uniform(0.0, 10.0);
  return w;
}

void BM_Hungarian(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const WeightMatrix w = random_square(n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(hungarian_max_weight(w).total_weight);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Hungarian)->Arg(8)->Arg(32)->Arg(128)->Arg(512)->Complexity(benchmark::oN);

void BM_EnumerateIndependentSets(benchmark::State& state) {
  // Clustered conflict graph: cliques of 4 with no cross edges.
  const int n_cliques = static_cast<int>(state.range(0));
  std::vector<std::pair<int, int>> edges;
  for (int c = 0; c < n_cliques; ++c)
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) edges.emplace_back(4 * c + a, 4 * c + b);
  const CollisionGraph g(static_cast<std::size_t>(4 * n_cliques), std::move(edges));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_independent_sets(g, 1u << 22).size());
}
BENCHMARK(BM_EnumerateIndependentSets)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

SimulationConfig bench_config(PolicyKind kind) {
  SimulationConfig cfg;
  cfg.n_nodes = 12;
  cfg.comm_range = 150.0;
  cfg.interference_range = 200.0;
  cfg.radio.n_slots = 4;
  cfg.radio.n_frequencies = 2;
  cfg.policy.kind = kind;
  cfg.n_replications = 1;
  cfg.master_seed = 5;
  return cfg;
}

void BM_CyclePerfectCsi(benchmark::State& state) {
  const Scenario s = build_scenario(bench_config(PolicyKind::perfect_csi));
  auto policy =
      make_policy(PolicyKind::perfect_csi, s.catalog, s.mean_graph, s.space, s.radio, s.sigma, 7.0);
  Rng chan(1), noise(2);
  for (auto _ : state) benchmark::DoNotOptimize(run_cycle(*policy, s, chan, noise).overall_throughput);
}
BENCHMARK(BM_CyclePerfectCsi);

void BM_CycleLlr(benchmark::State& state) {
  const Scenario s = build_scenario(bench_config(PolicyKind::cmab_llr));
  auto policy = make_policy(PolicyKind::cmab_llr, s.catalog, s.mean_graph, s.space, s.radio, s.sigma, 7.0);
  Rng chan(1), noise(2);
  for (auto _ : state) benchmark::DoNotOptimize(run_cycle(*policy, s, chan, noise).overall_throughput);
}
BENCHMARK(BM_CycleLlr);

void BM_SampleCycle(benchmark::State& state) {
  const Scenario s = build_scenario(bench_config(PolicyKind::statistical));
  Rng rng(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_cycle(s.distributions, s.space, s.radio.n_slots, rng).size());
}
BENCHMARK(BM_SampleCycle);

}  // namespace

BENCHMARK_MAIN();
