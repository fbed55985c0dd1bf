#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "domhad/graph.hpp"

namespace domhad {

/// A small graph whose vertices carry role names, e.g. (b1, b2, b3, b, b') for the banner.
struct Pattern {
  Graph shape;
  std::vector<std::string> roles;

  int order() const { return shape.order(); }

  static Pattern two_k2();
  /// C4 plus a pendant: roles (b1, b2, b3, b, b'), edges b1b2, b2b3, b3b, bb1, bb'.
  static Pattern banner();
  /// Cycle with roles v1..v_len in cyclic order.
  static Pattern cycle(int len);
  /// Path with roles v1..v_len in order.
  static Pattern path(int len);
};

/// Injective role -> host vertex map; `image[r]` is the host vertex playing role r.
struct Embedding {
  std::vector<int> image;

  int operator[](std::size_t role) const { return image[role]; }
  std::size_t size() const { return image.size(); }
  VertexSet vertices() const { return VertexSet::from(image); }
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Checks injectivity and that every role pair has the host adjacency the
/// pattern prescribes. Independent of the search engine.
bool is_induced_embedding(const Graph& host, const Pattern& p, const Embedding& e);

/// Lexicographically least induced embedding under role order, if any.
std::optional<Embedding> find_induced(const Graph& host, const Pattern& p);

/// Visits every induced embedding in lexicographic order (automorphic copies
/// included). Return false from the visitor to stop.
void for_each_induced(const Graph& host, const Pattern& p, const std::function<bool(const Embedding&)>& visit);

/// Two disjoint edges (a,b), (c,d) with no edge between them; roles (a, b, c, d).
/// Scans edge pairs in lexicographic order.
std::optional<Embedding> find_2k2(const Graph& host);
inline bool is_2k2_free(const Graph& host) { return !find_2k2(host).has_value(); }

std::optional<Embedding> find_banner(const Graph& host);

/// Induced cycle of the given length (>= 4, else ArgumentError), cyclically ordered.
std::optional<Embedding> find_induced_cycle(const Graph& host, int len);

/// Visits each induced cycle of length `len` exactly once, presented with its
/// least vertex first and the smaller of that vertex's two cycle neighbors second.
/// Visits in lexicographic order of that presentation. Return false to stop.
void for_each_induced_cycle(const Graph& host, int len, const std::function<bool(const Embedding&)>& visit);

/// {2K2, C4, C5}-free.
bool is_split_graph(const Graph& host);

}  // namespace domhad
