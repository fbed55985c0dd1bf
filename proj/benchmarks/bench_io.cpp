#include <benchmark/benchmark.h>

#include "domhad/generators.hpp"
#include "domhad/graph_io.hpp"
#include "domhad/patterns.hpp"

using namespace domhad;

static void bm_graph6_round_trip(benchmark::State& state) {
  const auto text = emit_graph6(gen::random_gnp(static_cast<int>(state.range(0)), 0.5, 3));
  for (auto _ : state) benchmark::DoNotOptimize(emit_graph6(parse_graph6(text)));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(bm_graph6_round_trip)->RangeMultiplier(4)->Range(8, 512);

static void bm_two_k2_scan(benchmark::State& state) {
  const auto g = gen::random_2k2_free(static_cast<int>(state.range(0)), 0.3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(is_2k2_free(g));
}
BENCHMARK(bm_two_k2_scan)->RangeMultiplier(2)->Range(16, 128);
