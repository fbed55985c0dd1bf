#include <benchmark/benchmark.h>

#include <vector>

#include "domhad/extraction.hpp"
#include "domhad/generators.hpp"

using namespace domhad;

namespace {

std::vector<Graph> corpus(std::size_t count) {
  std::vector<Graph> out;
  for (std::uint64_t seed = 0; seed < count; ++seed) out.push_back(gen::random_structured_2k2_free(seed));
  return out;
}

}  // namespace

static void bm_extract_dominating(benchmark::State& state) {
  const auto graphs = corpus(256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(extract_dominating(graphs[i++ % graphs.size()]).size());
}
BENCHMARK(bm_extract_dominating);

static void bm_extract_dominating_verified(benchmark::State& state) {
  const auto graphs = corpus(256);
  ExtractOptions opts;
  opts.verify_intermediate = true;
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(extract_dominating(graphs[i++ % graphs.size()], opts).size());
}
BENCHMARK(bm_extract_dominating_verified);

static void bm_extract_micu(benchmark::State& state) {
  const auto graphs = corpus(256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(extract_micu_minor(graphs[i++ % graphs.size()]).size());
}
BENCHMARK(bm_extract_micu);

static void bm_extract_pentagon_blowup(benchmark::State& state) {
  const auto g = gen::pentagon_blowup(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(extract_dominating(g).size());
  state.counters["n"] = g.order();
}
BENCHMARK(bm_extract_pentagon_blowup)->DenseRange(2, 5);
