#include <gtest/gtest.h>

#include <map>
#include <json.hpp>
#include <set>

#include "domhad/error.hpp"
#include "domhad/exact.hpp"
#include "domhad/extraction.hpp"
#include "domhad/generators.hpp"
#include "oracles.hpp"

using namespace domhad;

namespace {

using Lists = std::vector<std::vector<int>>;

Graph k4_pendant() {
  return Graph::from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
}

struct Traced {
  MinorModel model;
  std::vector<TraceEvent> events;
};

Traced traced(const Graph& g) {
  Traced t;
  ExtractOptions opts;
  opts.verify_intermediate = true;
  opts.trace = [&](const TraceEvent& e) { t.events.push_back(e); };
  t.model = extract_dominating(g, opts);
  return t;
}

bool fired(const Traced& t, Branch b) {
  for (const auto& e : t.events)
    if (e.branch == b) return true;
  return false;
}

// First structured seed whose trace shows `b` on the input graph itself.
std::optional<std::uint64_t> seed_with_root_branch(Branch b, std::uint64_t limit = 4000) {
  for (std::uint64_t seed = 0; seed < limit; ++seed) {
    auto t = traced(gen::random_structured_2k2_free(seed));
    for (const auto& e : t.events)
      if (e.branch == b && e.depth == 0) return seed;
  }
  return std::nullopt;
}

}  // namespace

TEST(Extract, C5GivesThreeSets) {
  auto g = gen::cycle(5);
  auto m = extract_dominating(g);
  EXPECT_EQ(m.size(), 3u);
  EXPECT_TRUE(oracle::dominating_model(g, m.to_lists()));
  EXPECT_EQ(m.to_lists(), (Lists{{0, 1, 2}, {3}, {4}}));
}

TEST(Extract, OctahedronUsesCliqueShortcut) {
  auto g = gen::complete_multipartite({2, 2, 2});
  auto t = traced(g);
  EXPECT_EQ(t.model.size(), 3u);
  for (const auto& s : t.model.sets()) EXPECT_EQ(s.size(), 1);
  EXPECT_TRUE(oracle::dominating_model(g, t.model.to_lists()));
  EXPECT_TRUE(fired(t, Branch::kCliqueShortcut));
}

TEST(Extract, CliquePlusPendantUsesSplitFallback) {
  auto t = traced(k4_pendant());
  EXPECT_EQ(t.model.to_lists(), (Lists{{0}, {1}, {2}, {3}}));
  ASSERT_EQ(t.events.size(), 1u);
  EXPECT_EQ(t.events[0].branch, Branch::kSplitFallback);
}

TEST(Extract, BaseCases) {
  EXPECT_TRUE(extract_dominating(Graph(0)).empty());
  EXPECT_EQ(extract_dominating(Graph(3)).size(), 1u);
  auto p = extract_dominating(gen::path(3));
  EXPECT_EQ(p.size(), 2u);
  EXPECT_TRUE(verify_dominating_model(gen::path(3), p).valid());
}

TEST(Extract, RejectsTwoK2) {
  try {
    extract_dominating(gen::two_k2());
    FAIL();
  } catch (const NotTwoK2FreeError& e) {
    EXPECT_EQ(e.witness(), (std::vector<int>{0, 1, 2, 3}));
  }
  EXPECT_THROW(extract_micu_minor(gen::cycle(6)), NotTwoK2FreeError);
}

TEST(Extract, NamedFamilies) {
  for (const auto& g : {gen::t_graph(), gen::banner(), gen::pentagon_k4_core(), gen::pentagon_blowup(2),
                        gen::pentagon_blowup(3), gen::antihole(7), gen::antihole(8), gen::antihole(9),
                        gen::complete(6), gen::cycle(4)}) {
    auto m = extract_dominating(g);
    EXPECT_EQ(static_cast<int>(m.size()), chromatic_number(g).chi);
    EXPECT_TRUE(verify_dominating_model(g, m).valid());
  }
}

TEST(Extract, PentagonBlowupsReachFinalConstruction) {
  EXPECT_TRUE(fired(traced(gen::pentagon_blowup(2)), Branch::kFinalEven));
  EXPECT_TRUE(fired(traced(gen::pentagon_blowup(3)), Branch::kFinalOdd));
  EXPECT_TRUE(fired(traced(gen::antihole(7)), Branch::kC4Reduction));
}

TEST(Extract, TraceLinesAreJson) {
  auto t = traced(gen::pentagon_blowup(2));
  ASSERT_FALSE(t.events.empty());
  for (const auto& e : t.events) {
    auto j = nlohmann::json::parse(to_json_line(e));
    for (const char* key : {"claim", "context", "depth", "n", "chi", "removed", "prepended"})
      EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["claim"], std::string(branch_name(e.branch)));
  }
  EXPECT_EQ(t.events[0].depth, 0);
  EXPECT_EQ(t.events[1].depth, 1);
}

TEST(BannerStep, BannerItselfCompletes) {
  auto g = gen::banner();
  auto out = claim1_banner_step(g, Embedding{{0, 1, 2, 3, 4}}, 2);
  ASSERT_TRUE(std::holds_alternative<MinorModel>(out));
  EXPECT_EQ(std::get<MinorModel>(out).to_lists(), (Lists{{0, 3, 4}, {1, 2}}));
}

TEST(BannerStep, TGraphGivesStructure) {
  auto g = gen::t_graph();
  auto out = claim1_banner_step(g, Embedding{{0, 1, 2, 5, 6}}, chromatic_number(g).chi);
  ASSERT_TRUE(std::holds_alternative<BannerStructure>(out));
  auto s = std::get<BannerStructure>(out);
  EXPECT_EQ(s.b4, 3);
  EXPECT_EQ(s.b5, 4);
  EXPECT_TRUE(g.adjacent(s.b4, 5) && g.adjacent(s.b4, 2));
  EXPECT_TRUE(g.adjacent(s.b5, 5) && g.adjacent(s.b5, 0));
  EXPECT_TRUE(g.adjacent(s.b4, s.b5));
}

TEST(BannerStep, RejectsNonBanner) {
  EXPECT_THROW(claim1_banner_step(gen::cycle(5), Embedding{{0, 1, 2, 3, 4}}, 3), ArgumentError);
}

TEST(C4Step, CycleSplitsIntoTwoEdges) {
  auto m = c4_reduction_step(gen::cycle(4), Embedding{{0, 1, 2, 3}});
  EXPECT_EQ(m.to_lists(), (Lists{{0, 1}, {2, 3}}));
}

TEST(C4Step, Octahedron) {
  auto g = gen::complete_multipartite({2, 2, 2});
  auto c4 = find_induced_cycle(g, 4);
  ASSERT_TRUE(c4);
  auto m = c4_reduction_step(g, *c4);
  EXPECT_EQ(m.size(), 3u);
  EXPECT_TRUE(oracle::dominating_model(g, m.to_lists()));
}

TEST(SplitModel, Examples) {
  EXPECT_EQ(split_graph_model(k4_pendant()).to_lists(), (Lists{{0}, {1}, {2}, {3}}));
  EXPECT_EQ(split_graph_model(gen::complete(5)).size(), 5u);
  auto star = gen::complete_multipartite({1, 5});
  auto m = split_graph_model(star);
  EXPECT_EQ(m.size(), 2u);
  EXPECT_TRUE(verify_dominating_model(star, m).valid());
  EXPECT_THROW(split_graph_model(gen::cycle(4)), ArgumentError);
}

TEST(LowDegreeStep, MinimalPairOnStructuredGraphs) {
  auto seed = seed_with_root_branch(Branch::kClaim3Construction);
  ASSERT_TRUE(seed);
  auto g = gen::random_structured_2k2_free(*seed);
  auto pair = find_low_degree_c5_pair(g);
  ASSERT_TRUE(pair);
  EXPECT_GE(pair->degree, 1);
  EXPECT_LE(pair->degree, 3);
  EXPECT_TRUE(is_induced_embedding(g, Pattern::cycle(5), pair->c5));
  std::vector<TraceEvent> events;
  ExtractOptions opts;
  opts.trace = [&](const TraceEvent& e) { events.push_back(e); };
  auto m = low_degree_c5_step(g, pair->c5, pair->x, opts);
  EXPECT_EQ(static_cast<int>(m.size()), chromatic_number(g).chi);
  EXPECT_TRUE(oracle::dominating_model(g, m.to_lists()));
  // The four prepended sets alone form a dominating K4 model.
  for (const auto& e : events)
    if (e.branch == Branch::kClaim3Construction && e.depth == 0) {
      ASSERT_EQ(e.prepended.size(), 4u);
      EXPECT_TRUE(verify_dominating_model(g, MinorModel(e.prepended)).valid());
    }
}

TEST(LowDegreeStep, NoPairWhenC5Free) {
  EXPECT_FALSE(find_low_degree_c5_pair(gen::antihole(7)));
  EXPECT_FALSE(find_low_degree_c5_pair(gen::cycle(5)));
  // Every vertex of T off its pentagon sees zero or four pentagon vertices.
  EXPECT_FALSE(find_low_degree_c5_pair(gen::t_graph()));
  auto g = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 1}, {5, 2}});
  auto pair = find_low_degree_c5_pair(g);
  ASSERT_TRUE(pair);
  EXPECT_EQ(pair->x, 5);
  EXPECT_EQ(pair->degree, 3);
}

TEST(Partition, C5TakesEmptyYCase) {
  std::vector<TraceEvent> events;
  ExtractOptions opts;
  opts.trace = [&](const TraceEvent& e) { events.push_back(e); };
  auto out = build_c5_partition(gen::cycle(5), Embedding{{0, 1, 2, 3, 4}}, opts);
  ASSERT_TRUE(std::holds_alternative<MinorModel>(out));
  EXPECT_EQ(std::get<MinorModel>(out).to_lists(), (Lists{{0, 1, 2}, {3}, {4}}));
  ASSERT_FALSE(events.empty());
  EXPECT_EQ(events[0].branch, Branch::kYEmpty);
}

TEST(Partition, BlowupIsRegular) {
  for (int m = 2; m <= 4; ++m) {
    auto g = gen::pentagon_blowup(m);
    auto out = build_c5_partition(g, Embedding{{0, 1, 2, 3, 4}});
    ASSERT_TRUE(std::holds_alternative<C5Partition>(out)) << m;
    const auto& p = std::get<C5Partition>(out);
    EXPECT_EQ(p.m, m);
    EXPECT_TRUE(p.independent.empty());
    EXPECT_TRUE(p.joined.empty());
    for (int i = 0; i < 5; ++i)
      for (int yv : p.y[i]) {
        EXPECT_EQ((p.y[(i + 1) % 5] & g.neighbors(yv)).size(), m - 1);
        EXPECT_EQ((p.y[(i + 4) % 5] & g.neighbors(yv)).size(), m - 1);
      }
  }
}

TEST(FinalConstruction, BlockAndResidualProperties) {
  for (int m = 2; m <= 5; ++m) {
    auto g = gen::pentagon_blowup(m);
    auto p = std::get<C5Partition>(build_c5_partition(g, Embedding{{0, 1, 2, 3, 4}}));
    std::vector<TraceEvent> events;
    ExtractOptions opts;
    opts.trace = [&](const TraceEvent& e) { events.push_back(e); };
    auto model = final_construction(g, p, opts);
    const int chi = chromatic_number(g).chi;
    EXPECT_EQ(static_cast<int>(model.size()), chi);
    EXPECT_TRUE(oracle::dominating_model(g, model.to_lists()));

    ASSERT_FALSE(events.empty());
    const auto& top = events.front();
    EXPECT_EQ(top.branch, m % 2 ? Branch::kFinalOdd : Branch::kFinalEven);
    ASSERT_EQ(static_cast<int>(top.prepended.size()), 2 * m + 2);
    EXPECT_TRUE(verify_dominating_model(g, MinorModel(top.prepended)).valid());
    // R u I is (2m+2)-chromatic.
    EXPECT_EQ(chromatic_number(induced_subgraph(g, top.removed).graph).chi, 2 * m + 2);
    for (int v : g.vertices() - top.removed)
      for (const auto& d : top.prepended) EXPECT_TRUE(g.neighbors(v).intersects(d)) << v;
  }
}

TEST(Lift, KeepsLastQuotaSets) {
  auto g = gen::complete(6);
  auto residual = MinorModel::from_lists({{2}, {3}, {4}, {5}});
  auto m = lift_model(g, {VertexSet{0}, VertexSet{1}}, residual, 3);
  EXPECT_EQ(m.to_lists(), (Lists{{0}, {1}, {3}, {4}, {5}}));
  EXPECT_EQ(lift_model(g, {VertexSet{0}, VertexSet{1}}, residual, 4).to_lists(),
            (Lists{{0}, {1}, {2}, {3}, {4}, {5}}));
  EXPECT_THROW(lift_model(g, {VertexSet{0}, VertexSet{1}}, residual, 5), ExtractionError);
  EXPECT_THROW(lift_model(g, {VertexSet{0}}, residual, -1), ArgumentError);
}

TEST(Lift, RejectsUndominatedResidual) {
  auto g = gen::path(3);
  EXPECT_THROW(lift_model(g, {VertexSet{0}}, MinorModel::from_lists({{2}}), 1), ExtractionError);
}

TEST(Micu, Examples) {
  EXPECT_EQ(extract_micu_minor(gen::path(4)).to_lists(), (Lists{{0, 1}, {2, 3}}));
  auto c5 = extract_micu_minor(gen::cycle(5));
  EXPECT_EQ(c5.size(), 3u);
  EXPECT_TRUE(oracle::ordinary_model(gen::cycle(5), c5.to_lists()));
  auto c4 = extract_micu_minor(gen::cycle(4));
  ASSERT_EQ(c4.size(), 2u);
  EXPECT_EQ(c4[0].size(), 1);
  EXPECT_EQ(c4[1].size(), 1);
  EXPECT_TRUE(gen::cycle(4).adjacent(c4[0].first(), c4[1].first()));
}

TEST(Micu, StructuredGraphs) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto g = gen::random_structured_2k2_free(seed);
    auto m = extract_micu_minor(g);
    ASSERT_EQ(static_cast<int>(m.size()), chromatic_number(g).chi) << seed;
    ASSERT_TRUE(oracle::ordinary_model(g, m.to_lists())) << seed;
  }
}

TEST(Extract, StructuredGraphsWithIntermediateChecks) {
  std::set<Branch> seen;
  for (std::uint64_t seed = 0; seed < 1500; ++seed) {
    auto g = gen::random_structured_2k2_free(seed);
    auto t = traced(g);
    ASSERT_EQ(static_cast<int>(t.model.size()), chromatic_number(g).chi) << seed;
    ASSERT_TRUE(oracle::dominating_model(g, t.model.to_lists())) << seed;
    for (const auto& e : t.events) {
      seen.insert(e.branch);
      EXPECT_LT(e.n, g.order() + 1);
    }
  }
  for (Branch b : {Branch::kClaim1Completed, Branch::kC4Reduction, Branch::kSplitFallback, Branch::kYEmpty,
                   Branch::kYSingleton, Branch::kClaim8})
    EXPECT_TRUE(seen.count(b)) << branch_name(b);
}

TEST(Extract, RecursionShrinks) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto t = traced(gen::random_structured_2k2_free(seed));
    std::map<int, int> n_at_depth;
    for (const auto& e : t.events) {
      if (n_at_depth.count(e.depth - 1)) {
        EXPECT_LT(e.n, n_at_depth[e.depth - 1]);
      }
      n_at_depth[e.depth] = e.n;
    }
  }
}
