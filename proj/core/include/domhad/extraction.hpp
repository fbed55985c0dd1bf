#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "domhad/graph.hpp"
#include "domhad/minor_model.hpp"
#include "domhad/patterns.hpp"

namespace domhad {

/// Which step of the construction produced a block of branch sets.
enum class Branch {
  kEmpty,
  kChiOne,
  kChiTwo,
  kSplitFallback,
  kCliqueShortcut,
  kClaim1Completed,
  kClaim1Structure,
  kC4Reduction,
  kClaim3Construction,
  kYEmpty,
  kYSingleton,
  kYNextEmpty,
  kClaim8,
  kFinalEven,
  kFinalOdd,
  kMicuPath,
  kMicuCograph,
};

std::string_view branch_name(Branch b);

/// One line of the optional extraction trace. Vertex ids are those of the
/// top-level input graph.
struct TraceEvent {
  Branch branch = Branch::kEmpty;
  std::string context;  // e.g. "c5-free", "claim3/first-banner", "claim4"
  int depth = 0;
  int n = 0;
  int chi = 0;
  VertexSet removed;
  std::vector<VertexSet> prepended;
};

/// {"claim": ..., "context": ..., "depth": ..., "n": ..., "chi": ..., "removed": [...], "prepended": [[...]]}
std::string to_json_line(const TraceEvent& e);

struct ExtractOptions {
#ifdef NDEBUG
  bool verify_intermediate = false;
#else
  bool verify_intermediate = true;
#endif
  /// Upper bound on induced C5s scanned when looking for a low-degree vertex.
  std::size_t c5_cap = 1'000'000;
  std::function<void(const TraceEvent&)> trace;
};

/// The two extra vertices of the 7-vertex structure grown around a banner:
/// b4 complete to {b, b3}, b5 complete to {b, b1}, b4b5 an edge.
struct BannerStructure {
  int b4 = -1;
  int b5 = -1;
};

/// Either a finished model for the whole input, or the banner structure.
using ClaimOutcome = std::variant<MinorModel, BannerStructure>;

/// Decomposition around an induced C5 (v1..v5 = c5[0..4]):
/// I anticomplete to the cycle, J complete to it, y[i] the vertices missing only v_{i+1}.
struct C5Partition {
  std::array<int, 5> c5{};
  VertexSet independent;
  VertexSet joined;
  std::array<VertexSet, 5> y;
  int m = 0;
};

using PartitionOutcome = std::variant<C5Partition, MinorModel>;

/// An induced C5 and a vertex with between one and three neighbors on it,
/// minimizing that count over all such pairs.
struct LowDegreePair {
  Embedding c5;
  int x = -1;
  int degree = 0;
};

/// Dominating model with exactly chi(g) sets for a 2K2-free g.
/// Throws NotTwoK2FreeError (with witness) or ExtractionError.
MinorModel extract_dominating(const Graph& g, const ExtractOptions& options = {});

/// Banner (b1, b2, b3, b; b') given as an Embedding in that role order.
ClaimOutcome claim1_banner_step(const Graph& g, const Embedding& banner, int chi, const ExtractOptions& options = {});

/// Induced C4 (v1..v4) in a 2K2-free, C5-free, banner-free graph.
MinorModel c4_reduction_step(const Graph& g, const Embedding& c4, const ExtractOptions& options = {});

/// Maximum clique as singletons; requires a split graph.
MinorModel split_graph_model(const Graph& g);

std::optional<LowDegreePair> find_low_degree_c5_pair(const Graph& g, std::size_t c5_cap = 1'000'000);

MinorModel low_degree_c5_step(const Graph& g, const Embedding& c5, int x, const ExtractOptions& options = {});

/// Requires that every vertex off the cycle is anticomplete to it or sees at least four of its vertices.
PartitionOutcome build_c5_partition(const Graph& g, const Embedding& c5, const ExtractOptions& options = {});

MinorModel final_construction(const Graph& g, const C5Partition& part, const ExtractOptions& options = {});

/// prefix followed by the last `quota` sets of `residual` (all ids in g).
/// Checks that every vertex of a kept residual set has a neighbor in every
/// prefix set. Throws ExtractionError when quota exceeds the residual size.
MinorModel lift_model(const Graph& g, const std::vector<VertexSet>& prefix, const MinorModel& residual, int quota);

/// Ordinary clique minor with chi(g) sets for a 2K2-free g, by peeling induced P4s.
MinorModel extract_micu_minor(const Graph& g, const ExtractOptions& options = {});

}  // namespace domhad
