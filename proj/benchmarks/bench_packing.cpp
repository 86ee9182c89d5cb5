#include <benchmark/benchmark.h>

#include <string>

#include "idim/cnf.hpp"
#include "idim/families.hpp"
#include "idim/packing.hpp"
#include "idim/sat_reduction.hpp"

namespace {

using namespace idim;

// Every sign pattern over three variables, repeated `copies` times on fresh
// variable triples: unsatisfiable, 90 * copies vertices.
CnfFormula sign_patterns(int copies) {
  std::string text = "p cnf " + std::to_string(3 * copies) + " " + std::to_string(8 * copies) + "\n";
  for (int c = 0; c < copies; ++c)
    for (unsigned signs = 0; signs < 8; ++signs) {
      for (int v = 1; v <= 3; ++v) text += ((signs >> (v - 1)) & 1U ? "-" : "") + std::to_string(3 * c + v) + " ";
      text += "0\n";
    }
  return parse_dimacs_cnf(text);
}

void BM_MaxPackingReduction(benchmark::State& state) {
  const ReductionOutput red = build_reduction(sign_patterns(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(max_packing(red.graph).size);
  state.counters["vertices"] = static_cast<double>(red.graph.order());
}
BENCHMARK(BM_MaxPackingReduction)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_MaxPackingCycle(benchmark::State& state) {
  const Graph g = generate_family({Family::cycle, {static_cast<std::size_t>(state.range(0))}}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(max_packing(g).size);
}
BENCHMARK(BM_MaxPackingCycle)->RangeMultiplier(2)->Range(16, 256);

void BM_EnumerateMaxPackings(benchmark::State& state) {
  const Graph g = generate_family({Family::cycle, {static_cast<std::size_t>(state.range(0))}}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(max_packing(g, {.enumerate_all = true}).all_witnesses->size());
}
BENCHMARK(BM_EnumerateMaxPackings)->DenseRange(7, 19, 4);

}  // namespace
