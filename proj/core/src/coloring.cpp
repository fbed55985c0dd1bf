#include <algorithm>

#include "domhad/error.hpp"
#include "domhad/exact.hpp"

namespace domhad {

void Deadline::check() const {
  if (at_ && Clock::now() > *at_) throw TimeoutError("search deadline exceeded");
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.color.size()) != g.order()) return false;
  for (int v = 0; v < g.order(); ++v)
    if (c.color[v] < 0 || c.color[v] >= c.k) return false;
  for (auto [u, v] : g.edges())
    if (c.color[u] == c.color[v]) return false;
  return true;
}

Coloring dsatur_coloring(const Graph& g) {
  const int n = g.order();
  Coloring out{std::vector<int>(static_cast<std::size_t>(n), -1), 0};
  std::vector<std::vector<char>> seen(static_cast<std::size_t>(n));
  std::vector<int> sat(static_cast<std::size_t>(n), 0);
  VertexSet uncolored = g.vertices();
  for (int step = 0; step < n; ++step) {
    int best = -1;
    int best_deg = -1;
    for (int v : uncolored) {
      int deg = (g.neighbors(v) & uncolored).size();
      if (best == -1 || sat[v] > sat[best] || (sat[v] == sat[best] && deg > best_deg)) {
        best = v;
        best_deg = deg;
      }
    }
    int c = 0;
    while (c < static_cast<int>(seen[best].size()) && seen[best][c]) ++c;
    out.color[best] = c;
    out.k = std::max(out.k, c + 1);
    uncolored.erase(best);
    for (int w : g.neighbors(best)) {
      auto& s = seen[w];
      if (static_cast<int>(s.size()) <= c) s.resize(static_cast<std::size_t>(c) + 1, 0);
      if (!s[c]) {
        s[c] = 1;
        ++sat[w];
      }
    }
  }
  return out;
}

namespace {

// Exhaustive k-colorability with DSATUR branching order. New colors are only
// introduced in increasing order, which removes color-permutation symmetry.
class KColorSearch {
 public:
  KColorSearch(const Graph& g, int k, const Deadline& deadline)
      : g_(g),
        k_(k),
        deadline_(deadline),
        color_(static_cast<std::size_t>(g.order()), -1),
        count_(static_cast<std::size_t>(g.order()) * static_cast<std::size_t>(k), 0),
        sat_(static_cast<std::size_t>(g.order()), 0),
        uncolored_(g.vertices()) {}

  std::optional<Coloring> run() {
    if (g_.order() == 0) return Coloring{{}, 0};
    if (k_ <= 0) return std::nullopt;
    if (!solve(0)) return std::nullopt;
    Coloring c{color_, 0};
    for (int x : color_) c.k = std::max(c.k, x + 1);
    return c;
  }

 private:
  int& count(int v, int c) { return count_[static_cast<std::size_t>(v) * k_ + c]; }

  void assign(int v, int c) {
    color_[v] = c;
    uncolored_.erase(v);
    for (int w : g_.neighbors(v))
      if (count(w, c)++ == 0) ++sat_[w];
  }
  void unassign(int v, int c) {
    for (int w : g_.neighbors(v))
      if (--count(w, c) == 0) --sat_[w];
    uncolored_.insert(v);
    color_[v] = -1;
  }

  bool solve(int used) {
    deadline_.tick();
    if (uncolored_.empty()) return true;
    int best = -1;
    int best_deg = -1;
    for (int v : uncolored_) {
      if (best != -1 && sat_[v] < sat_[best]) continue;
      int deg = (g_.neighbors(v) & uncolored_).size();
      if (best == -1 || sat_[v] > sat_[best] || deg > best_deg) {
        best = v;
        best_deg = deg;
      }
    }
    if (sat_[best] >= k_) return false;
    const int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      if (count(best, c)) continue;
      assign(best, c);
      if (solve(std::max(used, c + 1))) return true;
      unassign(best, c);
    }
    return false;
  }

  const Graph& g_;
  int k_;
  const Deadline& deadline_;
  std::vector<int> color_;
  std::vector<int> count_;
  std::vector<int> sat_;
  VertexSet uncolored_;
};

}  // namespace

std::optional<Coloring> k_coloring(const Graph& g, int k, const Deadline& deadline) {
  return KColorSearch(g, k, deadline).run();
}

ChromaticResult chromatic_number(const Graph& g, const Deadline& deadline) {
  ChromaticResult out;
  out.coloring.color.assign(static_cast<std::size_t>(g.order()), 0);
  for (const VertexSet& comp : connected_components(g, g.vertices())) {
    InducedSubgraph sub = induced_subgraph(g, comp);
    Coloring best = dsatur_coloring(sub.graph);
    const int lower = clique_number(sub.graph, deadline).size;
    for (int k = lower; k < best.k; ++k) {
      if (auto c = k_coloring(sub.graph, k, deadline)) {
        best = *c;
        break;
      }
    }
    for (int i = 0; i < sub.graph.order(); ++i) out.coloring.color[sub.to_parent[i]] = best.color[i];
    out.chi = std::max(out.chi, best.k);
  }
  out.coloring.k = out.chi;
  return out;
}

}  // namespace domhad
