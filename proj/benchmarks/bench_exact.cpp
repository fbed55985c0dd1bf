#include <benchmark/benchmark.h>

#include "domhad/exact.hpp"
#include "domhad/generators.hpp"

using namespace domhad;

static void bm_chromatic_structured(benchmark::State& state) {
  const auto g = gen::random_structured_2k2_free(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g).chi);
  state.counters["n"] = g.order();
}
BENCHMARK(bm_chromatic_structured)->Arg(3)->Arg(17)->Arg(101);

static void bm_chromatic_gnp(benchmark::State& state) {
  const auto g = gen::random_gnp(static_cast<int>(state.range(0)), 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g).chi);
}
BENCHMARK(bm_chromatic_gnp)->DenseRange(20, 50, 15);

static void bm_clique(benchmark::State& state) {
  const auto g = gen::random_gnp(static_cast<int>(state.range(0)), 0.5, 11);
  for (auto _ : state) benchmark::DoNotOptimize(clique_number(g).size);
}
BENCHMARK(bm_clique)->RangeMultiplier(2)->Range(32, 256);

static void bm_dominating_hadwiger(benchmark::State& state) {
  const auto g = gen::random_structured_2k2_free(static_cast<std::uint64_t>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(dominating_hadwiger_number(g).value);
  state.counters["n"] = g.order();
}
BENCHMARK(bm_dominating_hadwiger)->Arg(1)->Arg(2)->Arg(3);

static void bm_dominating_k4_subdivision(benchmark::State& state) {
  const auto g = gen::one_subdivision_complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(has_dominating_kt(g, 4).has_value());
}
BENCHMARK(bm_dominating_k4_subdivision)->Arg(4)->Arg(5);

static void bm_connected_sets(benchmark::State& state) {
  const auto g = gen::petersen();
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_connected_sets(g, g.vertices(), static_cast<int>(state.range(0))).size());
}
BENCHMARK(bm_connected_sets)->DenseRange(2, 6, 2);
