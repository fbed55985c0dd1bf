#include <gtest/gtest.h>

#include "domhad/exact.hpp"
#include "domhad/extraction.hpp"
#include "domhad/generators.hpp"
#include "domhad/graph_io.hpp"
#include "domhad/patterns.hpp"
#include "oracles.hpp"

using namespace domhad;

namespace {

std::vector<Graph> corpus(int max_n) {
  std::vector<Graph> out;
  for (const auto& line : oracle::small_graph_corpus(max_n)) out.push_back(parse_graph6(line));
  return out;
}

}  // namespace

TEST(Properties, SuffixOfDominatingModelIsDominating) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    auto g = gen::random_structured_2k2_free(seed, 16);
    auto m = extract_dominating(g);
    for (std::size_t k = 0; k <= m.size(); ++k) ASSERT_TRUE(oracle::dominating_model(g, m.suffix(k).to_lists()));
  }
}

TEST(Properties, DominatingImpliesOrdinary) {
  for (const auto& g : corpus(6)) {
    auto hd = dominating_hadwiger_number(g);
    ASSERT_TRUE(verify_ordinary_model(g, hd.witness).valid());
  }
}

TEST(Properties, CliqueBelowDominatingBelowOrdinary) {
  for (const auto& g : corpus(7)) {
    const int omega = clique_number(g).size;
    const int hd = dominating_hadwiger_number(g).value;
    const int h = hadwiger_number(g).value;
    ASSERT_LE(omega, hd) << emit_graph6(g);
    ASSERT_LE(hd, h) << emit_graph6(g);
  }
}

TEST(Properties, HadwigerNumbersMatchOracleOnSixVertices) {
  for (const auto& g : corpus(6)) ASSERT_EQ(dominating_hadwiger_number(g).value, oracle::dominating_hadwiger(g));
}

TEST(Properties, EdgeAdditionNeverLowersDominatingHadwiger) {
  for (const auto& g : corpus(5)) {
    const int base = dominating_hadwiger_number(g).value;
    for (int u = 0; u < g.order(); ++u)
      for (int v = u + 1; v < g.order(); ++v) {
        if (g.adjacent(u, v)) continue;
        Graph h = g;
        h.add_edge(u, v);
        ASSERT_GE(dominating_hadwiger_number(h).value, base);
      }
  }
}

TEST(Properties, ColoringsAreProper) {
  for (const auto& g : corpus(7)) {
    auto r = chromatic_number(g);
    ASSERT_TRUE(oracle::proper_coloring(g, r.coloring.color, r.chi));
    auto d = dsatur_coloring(g);
    ASSERT_TRUE(oracle::proper_coloring(g, d.color, d.k));
  }
}

TEST(Properties, ChromaticLowerBoundIsTight) {
  for (const auto& g : corpus(6)) {
    const int chi = chromatic_number(g).chi;
    if (chi > 0) {
      ASSERT_TRUE(k_coloring(g, chi).has_value());
    }
    if (chi > 1) {
      ASSERT_FALSE(k_coloring(g, chi - 1).has_value());
    }
  }
}

TEST(Properties, ExtractorSoundOnUniformTwoK2FreeGraphs) {
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    const int n = 5 + static_cast<int>(seed % 22);
    auto g = gen::random_2k2_free(n, 0.1 + 0.05 * static_cast<double>(seed % 9), seed);
    auto m = extract_dominating(g);
    const int chi = chromatic_number(g).chi;
    ASSERT_EQ(static_cast<int>(m.size()), chi) << seed;
    if (n <= 12) {
      ASSERT_EQ(chi, oracle::chromatic(g)) << seed;
    }
    ASSERT_TRUE(oracle::dominating_model(g, m.to_lists())) << seed;
  }
}

TEST(Properties, ExtractorSoundOnEveryTwoK2FreeCorpusGraph) {
  int count = 0;
  for (const auto& g : corpus(8)) {
    if (!oracle::two_k2_free(g)) continue;
    ++count;
    auto m = extract_dominating(g);
    ASSERT_EQ(static_cast<int>(m.size()), chromatic_number(g).chi) << emit_graph6(g);
    ASSERT_TRUE(verify_dominating_model(g, m).valid()) << emit_graph6(g);
    auto o = extract_micu_minor(g);
    ASSERT_EQ(o.size(), m.size());
    ASSERT_TRUE(verify_ordinary_model(g, o).valid()) << emit_graph6(g);
  }
  EXPECT_GT(count, 1000);
}

TEST(Properties, ModelsUseDisjointVerticesOfTheHost) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = gen::random_structured_2k2_free(seed);
    auto m = extract_dominating(g);
    int total = 0;
    for (const auto& s : m.sets()) total += s.size();
    ASSERT_EQ(m.support().size(), total);
    ASSERT_TRUE(m.support().subset_of(g.vertices()));
  }
}

TEST(Properties, EmbeddingsAreInduced) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto g = gen::random_gnp(9, 0.5, seed);
    for (const auto& p : {Pattern::two_k2(), Pattern::banner(), Pattern::cycle(4), Pattern::cycle(5), Pattern::path(4)})
      if (auto e = find_induced(g, p)) {
        ASSERT_TRUE(is_induced_embedding(g, p, *e));
      }
  }
}
