#pragma once

#include <span>
#include <utility>
#include <vector>

#include "domhad/vertex_set.hpp"

namespace domhad {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 stored as bitset adjacency rows.
///
/// Invariants: rows are symmetric, no vertex is its own neighbor, and no bit at
/// position >= n is set. Mutators exist for construction; share graphs as const.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws ConstructionError naming the offending pair on a self-loop or an
  /// endpoint outside [0, n). Duplicate edges collapse.
  static Graph from_edge_list(int n, std::span<const Edge> edges);
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  int num_edges() const;

  const VertexSet& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  int degree(int v) const { return adj_[v].size(); }
  VertexSet vertices() const { return VertexSet::range(n_); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

/// An induced subgraph together with the sorted-order map from new to old ids.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;

  /// Maps a vertex set of `graph` back to parent ids.
  VertexSet lift(const VertexSet& s) const;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
Graph complement(const Graph& g);

/// Union of open neighborhoods of the members of s.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

/// True iff s is non-empty and g[s] is connected.
bool is_connected_set(const Graph& g, const VertexSet& s);

/// Connected components of g[within], each as a vertex set, ordered by least vertex.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);

/// Throw ArgumentError when x and y overlap.
bool is_complete_to(const Graph& g, const VertexSet& x, const VertexSet& y);
bool is_anticomplete_to(const Graph& g, const VertexSet& x, const VertexSet& y);

/// Vertices of `within` adjacent to no member of s.
inline VertexSet anticomplete_part(const Graph& g, const VertexSet& within, const VertexSet& s) {
  return within - neighborhood(g, s);
}

}  // namespace domhad
