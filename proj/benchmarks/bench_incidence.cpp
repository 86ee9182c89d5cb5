#include <benchmark/benchmark.h>

#include <vector>

#include "idim/corpus.hpp"
#include "idim/incidence.hpp"
#include "idim/metric_dims.hpp"

namespace {

using namespace idim;

std::vector<Graph> corpus(std::size_t n) {
  std::vector<Graph> out;
  for (std::size_t i = 0; i < 32; ++i) out.push_back(random_corpus_graph(n, 7, i));
  return out;
}

void BM_DimBrute(benchmark::State& state) {
  const auto graphs = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    for (const Graph& g : graphs) benchmark::DoNotOptimize(dim_i_brute(g, {.use_sandwich = false}).value);
}
BENCHMARK(BM_DimBrute)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

void BM_DimBruteSandwich(benchmark::State& state) {
  const auto graphs = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    for (const Graph& g : graphs) benchmark::DoNotOptimize(dim_i_brute(g).value);
}
BENCHMARK(BM_DimBruteSandwich)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

void BM_DimStructural(benchmark::State& state) {
  const auto graphs = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    for (const Graph& g : graphs)
      if (g.size() > 0) benchmark::DoNotOptimize(dim_i_structural(g).value);
}
BENCHMARK(BM_DimStructural)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_DimAdjacency(benchmark::State& state) {
  const auto graphs = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    for (const Graph& g : graphs) benchmark::DoNotOptimize(dim_a(g).value);
}
BENCHMARK(BM_DimAdjacency)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

}  // namespace
