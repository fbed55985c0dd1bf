#include "oracles.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

using domhad::Graph;

bool proper_coloring(const Graph& g, const std::vector<int>& color, int k) {
  if (static_cast<int>(color.size()) != g.order()) return false;
  for (int u = 0; u < g.order(); ++u) {
    if (color[u] < 0 || color[u] >= k) return false;
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) && color[u] == color[v]) return false;
  }
  return true;
}

int chromatic(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  std::function<bool(int, int)> fill = [&](int v, int k) {
    if (v == n) return true;
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = !(g.adjacent(u, v) && color[u] == c);
      if (!ok) continue;
      color[v] = c;
      if (fill(v + 1, k)) return true;
    }
    color[v] = -1;
    return false;
  };
  for (int k = 0;; ++k)
    if (fill(0, k)) return k;
}

int clique(const Graph& g) {
  const int n = g.order();
  if (n > 24) throw std::invalid_argument("oracle clique: n too large");
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && !g.adjacent(u, v)) ok = false;
    if (ok) best = size;
  }
  return best;
}

int independence(const Graph& g) {
  Graph c(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return clique(c);
}

bool connected(const Graph& g, const std::vector<int>& s) {
  if (s.empty()) return false;
  std::vector<int> parent(s.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (g.adjacent(s[a], s[b])) parent[find(static_cast<int>(a))] = find(static_cast<int>(b));
  const int root = find(0);
  for (std::size_t a = 0; a < s.size(); ++a)
    if (find(static_cast<int>(a)) != root) return false;
  return true;
}

namespace {

bool model(const Graph& g, const Sets& sets, bool dominating) {
  std::vector<int> seen(g.order(), 0);
  for (const auto& s : sets) {
    if (!connected(g, s)) return false;
    for (int v : s) {
      if (v < 0 || v >= g.order() || seen[v]) return false;
      seen[v] = 1;
    }
  }
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      int hits = 0;
      for (int b : sets[j]) {
        bool hit = false;
        for (int a : sets[i]) hit = hit || g.adjacent(a, b);
        hits += hit;
      }
      if (dominating ? hits != static_cast<int>(sets[j].size()) : hits == 0) return false;
    }
  return true;
}

bool exists_model(const Graph& g, int t, bool dominating) {
  if (t <= 0) return true;
  const int n = g.order();
  if (t > n) return false;
  std::vector<int> label(n, 0);
  std::function<bool(int)> go = [&](int v) {
    if (v == n) {
      Sets sets(t);
      for (int u = 0; u < n; ++u)
        if (label[u] > 0) sets[label[u] - 1].push_back(u);
      return model(g, sets, dominating);
    }
    for (int l = 0; l <= t; ++l) {
      label[v] = l;
      if (go(v + 1)) return true;
    }
    return false;
  };
  return go(0);
}

}  // namespace

bool dominating_model(const Graph& g, const Sets& sets) { return model(g, sets, true); }
bool ordinary_model(const Graph& g, const Sets& sets) { return model(g, sets, false); }

bool has_dominating_kt(const Graph& g, int t) { return exists_model(g, t, true); }
bool has_kt_minor(const Graph& g, int t) { return exists_model(g, t, false); }

int dominating_hadwiger(const Graph& g) {
  int t = 0;
  while (has_dominating_kt(g, t + 1)) ++t;
  return t;
}

bool two_k2_free(const Graph& g) {
  const int n = g.order();
  int q[4];
  for (q[0] = 0; q[0] < n; ++q[0])
    for (q[1] = q[0] + 1; q[1] < n; ++q[1])
      for (q[2] = q[1] + 1; q[2] < n; ++q[2])
        for (q[3] = q[2] + 1; q[3] < n; ++q[3]) {
          int deg[4] = {0, 0, 0, 0}, edges = 0;
          for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
              if (g.adjacent(q[a], q[b])) ++deg[a], ++deg[b], ++edges;
          if (edges == 2 && deg[0] == 1 && deg[1] == 1 && deg[2] == 1 && deg[3] == 1) return false;
        }
  return true;
}

bool split_by_degrees(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.order(); ++v) {
    int k = 0;
    for (int u = 0; u < g.order(); ++u) k += g.adjacent(u, v);
    d.push_back(k);
  }
  std::sort(d.rbegin(), d.rend());
  int m = 0;
  for (int i = 0; i < static_cast<int>(d.size()); ++i)
    if (d[i] >= i) m = i + 1;
  long lhs = 0, rhs = static_cast<long>(m) * (m - 1);
  for (int i = 0; i < static_cast<int>(d.size()); ++i) (i < m ? lhs : rhs) += d[i];
  return lhs == rhs;
}

Graph decode_graph6(const std::string& s) {
  const int n = s.at(0) - 63;
  if (n < 0 || n >= 63) throw std::invalid_argument("oracle decoder handles the short form only");
  Graph g(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = s.at(1 + bit / 6) - 63;
      if (byte >> (5 - bit % 6) & 1) g.add_edge(i, j);
    }
  return g;
}

std::vector<std::string> small_graph_corpus(int max_n) {
  std::ifstream in(std::string(DOMHAD_TEST_DATA_DIR) + "/graphs_upto8.g6");
  if (!in) throw std::runtime_error("missing small-graph corpus");
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] - 63 <= max_n) out.push_back(line);
  return out;
}

}  // namespace oracle
