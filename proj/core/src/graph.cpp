#include "domhad/graph.hpp"

#include <string>

#include "domhad/error.hpp"

namespace domhad {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw ConstructionError("negative vertex count " + std::to_string(n));
  if (n > kMaxVertices)
    throw CapacityError("graph on " + std::to_string(n) + " vertices exceeds capacity " +
                        std::to_string(kMaxVertices));
  adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    std::string pair = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    if (u < 0 || v < 0 || u >= n || v >= n) throw ConstructionError("endpoint out of range in edge " + pair);
    if (u == v) throw ConstructionError("self-loop " + pair);
    g.add_edge(u, v);
  }
  return g;
}

int Graph::num_edges() const {
  int twice = 0;
  for (const auto& row : adj_) twice += row.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v)) out.emplace_back(u, v);
  return out;
}

void Graph::add_edge(int u, int v) {
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::remove_edge(int u, int v) {
  adj_[u].erase(v);
  adj_[v].erase(u);
}

VertexSet InducedSubgraph::lift(const VertexSet& s) const {
  VertexSet out;
  for (int v : s) out.insert(to_parent[v]);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.to_parent = s.to_vector();
  const int k = static_cast<int>(out.to_parent.size());
  std::vector<int> to_child(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < k; ++i) to_child[out.to_parent[i]] = i;
  out.graph = Graph(k);
  for (int i = 0; i < k; ++i) {
    VertexSet row = g.neighbors(out.to_parent[i]) & s;
    for (int w : row)
      if (to_child[w] > i) out.graph.add_edge(i, to_child[w]);
  }
  return out;
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out;
  for (int v : s) out |= g.neighbors(v);
  return out;
}

bool is_connected_set(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  VertexSet seen{s.first()};
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet grown = (neighborhood(g, frontier) & s) - seen;
    seen |= grown;
    frontier = grown;
  }
  return seen == s;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp{left.first()};
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet grown = (neighborhood(g, frontier) & left) - comp;
      comp |= grown;
      frontier = grown;
    }
    left -= comp;
    out.push_back(comp);
  }
  return out;
}

namespace {

void require_disjoint(const VertexSet& x, const VertexSet& y) {
  if (x.intersects(y)) throw ArgumentError("complete/anticomplete query on overlapping sets");
}

}  // namespace

bool is_complete_to(const Graph& g, const VertexSet& x, const VertexSet& y) {
  require_disjoint(x, y);
  for (int v : x)
    if (!y.subset_of(g.neighbors(v))) return false;
  return true;
}

bool is_anticomplete_to(const Graph& g, const VertexSet& x, const VertexSet& y) {
  require_disjoint(x, y);
  for (int v : x)
    if (g.neighbors(v).intersects(y)) return false;
  return true;
}

}  // namespace domhad
