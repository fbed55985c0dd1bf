#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domhad/extraction.hpp"

namespace domhad::detail {

/// One level of the recursion: the current graph, its chromatic number, and
/// the map from its vertex ids to those of the top-level input.
struct Frame {
  const Graph& g;
  int chi;
  int depth;
  const std::vector<int>& root;
};

class Extractor {
 public:
  explicit Extractor(const ExtractOptions& options);

  MinorModel solve(const Graph& g, int depth, const std::vector<int>& root);

  ClaimOutcome claim1(const Frame& f, const Embedding& banner, std::string_view context);
  MinorModel c4_reduction(const Frame& f, const Embedding& c4);
  MinorModel split_model(const Frame& f);
  MinorModel low_degree(const Frame& f, const Embedding& c5, int x);
  PartitionOutcome partition(const Frame& f, const Embedding& c5);
  MinorModel final_block(const Frame& f, const C5Partition& p);

 private:
  Frame frame(const Graph& g, int depth, const std::vector<int>& root) const;
  std::optional<LowDegreePair> low_degree_pair(const Graph& g, const Frame& f) const;

  /// Removes `removed`, solves the rest, and puts `prefix` in front of the
  /// last chi - |prefix| sets of the result.
  MinorModel close(const Frame& f, Branch b, std::string_view context, const VertexSet& removed,
                   const std::vector<VertexSet>& prefix);
  MinorModel recurse(const Frame& f, const VertexSet& keep);
  MinorModel finish(const Frame& f, const MinorModel& model) const;

  void emit(const Frame& f, Branch b, std::string_view context, const VertexSet& removed,
            const std::vector<VertexSet>& prefix) const;
  [[noreturn]] void fail(std::string_view claim, const Frame& f, std::vector<int> witness,
                         const std::string& detail) const;

  ExtractOptions opts_;
};

Frame root_frame(const Graph& g, const std::vector<int>& identity);
std::vector<int> identity_map(int n);

}  // namespace domhad::detail
