#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "domhad/graph.hpp"

namespace domhad {

/// Ordered sequence (T1, ..., Tt) of branch sets over a host graph.
class MinorModel {
 public:
  MinorModel() = default;
  explicit MinorModel(std::vector<VertexSet> sets) : sets_(std::move(sets)) {}

  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  const VertexSet& operator[](std::size_t i) const { return sets_[i]; }
  const std::vector<VertexSet>& sets() const { return sets_; }
  void push_back(VertexSet s) { sets_.push_back(std::move(s)); }
  void pop_back() { sets_.pop_back(); }

  /// The last `count` sets (all of them when count >= size()).
  MinorModel suffix(std::size_t count) const;
  /// Union of all branch sets.
  VertexSet support() const;

  std::vector<std::vector<int>> to_lists() const;
  static MinorModel from_lists(const std::vector<std::vector<int>>& lists);

  friend bool operator==(const MinorModel&, const MinorModel&) = default;

 private:
  std::vector<VertexSet> sets_;
};

/// JSON array of arrays of vertex ids, order-significant: [[0,1,2],[3],[4]].
std::string to_json(const MinorModel& m);
/// Throws ArgumentError on malformed input.
MinorModel model_from_json(std::string_view text);

/// Outcome of checking a model against the dominating or ordinary definition.
/// Set positions `i`, `j` are 1-based (T_i, T_j); `witness` is a vertex id.
struct ModelReport {
  enum class Violation {
    kNone,
    kOutOfRange,
    kEmptySet,
    kOverlap,
    kDisconnected,
    kNotDominated,  // some vertex of T_j has no neighbor in T_i
    kNotAdjacent,   // no edge between T_i and T_j
  };

  Violation violation = Violation::kNone;
  int i = 0;
  int j = 0;
  int witness = -1;

  bool valid() const { return violation == Violation::kNone; }
  std::string condition() const;
  std::string describe() const;
};

/// Non-empty, pairwise disjoint, connected, and for i < j every vertex of T_j
/// has a neighbor in T_i.
ModelReport verify_dominating_model(const Graph& g, const MinorModel& m);
/// Same, but for i < j only some T_i-T_j edge is required.
ModelReport verify_ordinary_model(const Graph& g, const MinorModel& m);

}  // namespace domhad
