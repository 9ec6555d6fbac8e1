// Serial vs OpenMP subgraph-sampling kernels, and the O(k^2) reference.

#include <benchmark/benchmark.h>

#include <map>

#include "netgof/dist.hpp"
#include "netgof/gof.hpp"
#include "netgof/sampling.hpp"

using namespace netgof;

namespace {

const Graph& graph_for(std::size_t n) {
  static std::map<std::size_t, Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, generate_gnm(n, 5 * n / 2, RngSeed{1})).first;
  return it->second;
}

void BM_DrawSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph& g = graph_for(n);
  const auto k = optimal_subgraph_size(n);
  for (auto _ : state) benchmark::DoNotOptimize(draw_edge_counts(g, k, 1000, RngSeed{2}, Exec::serial));
}

void BM_DrawParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph& g = graph_for(n);
  const auto k = optimal_subgraph_size(n);
  for (auto _ : state) benchmark::DoNotOptimize(draw_edge_counts(g, k, 1000, RngSeed{2}, Exec::parallel));
}

void BM_DrawReference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph& g = graph_for(n);
  const auto k = optimal_subgraph_size(n);
  for (auto _ : state) benchmark::DoNotOptimize(draw_edge_counts_reference(g, k, 100, RngSeed{2}));
}

void BM_EmpiricalTest(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph& g = graph_for(n);
  TestOptions options;
  options.exec = state.range(1) ? Exec::parallel : Exec::serial;
  options.replicates = 50;
  for (auto _ : state) benchmark::DoNotOptimize(empirical_test(g, options));
}

}  // namespace

BENCHMARK(BM_DrawSerial)->RangeMultiplier(4)->Range(100, 6400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DrawParallel)->RangeMultiplier(4)->Range(100, 6400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DrawReference)->RangeMultiplier(4)->Range(100, 1600)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EmpiricalTest)->Args({316, 0})->Args({316, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
