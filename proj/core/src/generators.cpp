#include "domhad/generators.hpp"

#include <algorithm>

#include "domhad/error.hpp"
#include "domhad/patterns.hpp"

namespace domhad::gen {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw ArgumentError("uniform_below needs a positive bound");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ArgumentError(what);
}

}  // namespace

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete(int n) {
  require(n >= 0, "complete needs n >= 0");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
  int n = 0;
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    require(parts[p] >= 1, "multipartite part sizes must be positive");
    n += parts[p];
    part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
  }
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph banner() { return Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}}); }

Graph t_graph() {
  return Graph::from_edge_list(
      7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 2}, {5, 3}, {5, 4}, {5, 6}});
}

Graph one_subdivision_complete(int n) {
  require(n >= 1, "subdivision needs n >= 1");
  Graph g(n + n * (n - 1) / 2);
  int s = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++s) {
      g.add_edge(i, s);
      g.add_edge(s, j);
    }
  return g;
}

Graph two_k2() { return Graph::from_edge_list(4, {{0, 1}, {2, 3}}); }

Graph antihole(int n) {
  require(n >= 5, "antihole needs n >= 5");
  return complement(cycle(n));
}

Graph pentagon_blowup(int m) {
  require(m >= 1, "pentagon blow-up needs m >= 1");
  Graph g(5 + 5 * m);
  auto y = [m](int i, int a) { return 5 + i * m + a; };
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i)
    for (int a = 0; a < m; ++a) {
      for (int c = 0; c < 5; ++c)
        if (c != i) g.add_edge(y(i, a), c);
      for (int b = 0; b < m; ++b) {
        if (b > a) g.add_edge(y(i, a), y(i, b));
        g.add_edge(y(i, a), y((i + 2) % 5, b));
        if (b != a) g.add_edge(y(i, a), y((i + 1) % 5, b));
      }
    }
  return g;
}

Graph pentagon_k4_core() {
  return Graph::from_edge_list(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 2}, {6, 5}, {6, 2},
                                    {6, 4}, {7, 1}, {7, 2}, {7, 4}, {8, 0}, {8, 1}, {8, 3}, {9, 0}, {9, 5},
                                    {9, 3}, {6, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}});
}

std::vector<std::string> family_names() {
  return {"cycle",   "path",   "complete", "complete-multipartite", "petersen",         "banner",
          "t-graph", "one-subdivision-complete", "two-k2", "antihole", "pentagon-blowup", "pentagon-k4-core"};
}

Graph family(const std::string& name, const std::vector<int>& params) {
  auto arity = [&](std::size_t k) {
    require(params.size() == k, "family " + name + " takes " + std::to_string(k) + " parameter(s)");
  };
  if (name == "cycle") return arity(1), cycle(params[0]);
  if (name == "path") return arity(1), path(params[0]);
  if (name == "complete") return arity(1), complete(params[0]);
  if (name == "complete-multipartite") {
    require(!params.empty(), "complete-multipartite needs part sizes");
    return complete_multipartite(params);
  }
  if (name == "petersen") return arity(0), petersen();
  if (name == "banner") return arity(0), banner();
  if (name == "t-graph") return arity(0), t_graph();
  if (name == "one-subdivision-complete") return arity(1), one_subdivision_complete(params[0]);
  if (name == "two-k2") return arity(0), two_k2();
  if (name == "antihole") return arity(1), antihole(params[0]);
  if (name == "pentagon-blowup") return arity(1), pentagon_blowup(params[0]);
  if (name == "pentagon-k4-core") return arity(0), pentagon_k4_core();
  throw ArgumentError("unknown family '" + name + "'");
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
  Rng rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform01(rng) < p) g.add_edge(u, v);
  return g;
}

Graph repair_to_2k2_free(Graph g, Rng& rng) {
  while (auto w = find_2k2(g)) {
    const int a = (*w)[0], b = (*w)[1], c = (*w)[2], d = (*w)[3];
    const Edge cross[4] = {{a, c}, {a, d}, {b, c}, {b, d}};
    const Edge e = cross[uniform_below(rng, 4)];
    g.add_edge(e.first, e.second);
  }
  return g;
}

Graph random_2k2_free(int n, double p, std::uint64_t seed) {
  require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
  Rng rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform01(rng) < p) g.add_edge(u, v);
  return repair_to_2k2_free(std::move(g), rng);
}

namespace {

// Appends `extra` vertices, each adjacent to every earlier vertex with probability p.
Graph grow(const Graph& base, int extra, double p, Rng& rng) {
  Graph g(base.order() + extra);
  for (auto [u, v] : base.edges()) g.add_edge(u, v);
  for (int v = base.order(); v < g.order(); ++v)
    for (int u = 0; u < v; ++u)
      if (uniform01(rng) < p) g.add_edge(u, v);
  return g;
}

int uniform_between(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Pentagon blow-up with `joined` vertices complete to the cycle (each missing at
// most one vertex per Y class) and `independent` vertices attached only to them.
Graph perturbed_blowup(int m, int joined, int independent, Rng& rng) {
  Graph base = pentagon_blowup(m);
  Graph g(base.order() + joined + independent);
  for (auto [u, v] : base.edges()) g.add_edge(u, v);
  const int j0 = base.order();
  const int i0 = j0 + joined;
  for (int x = j0; x < i0; ++x) {
    for (int c = 0; c < 5; ++c) g.add_edge(x, c);
    for (int i = 0; i < 5; ++i) {
      const int miss = uniform01(rng) < 0.5 ? static_cast<int>(uniform_below(rng, m)) : -1;
      for (int a = 0; a < m; ++a)
        if (a != miss) g.add_edge(x, 5 + i * m + a);
    }
    for (int w = j0; w < x; ++w)
      if (uniform01(rng) < 0.5) g.add_edge(x, w);
  }
  for (int x = i0; x < g.order(); ++x)
    for (int w = j0; w < i0; ++w)
      if (uniform01(rng) < 0.5) g.add_edge(x, w);
  const int flips = static_cast<int>(uniform_below(rng, 3));
  for (int f = 0; f < flips; ++f) {
    const int a = static_cast<int>(uniform_below(rng, g.order()));
    const int b = static_cast<int>(uniform_below(rng, g.order()));
    if (a == b) continue;
    if (g.adjacent(a, b))
      g.remove_edge(a, b);
    else
      g.add_edge(a, b);
  }
  return g;
}

}  // namespace

Graph random_structured_2k2_free(std::uint64_t seed, int n_max) {
  require(n_max >= 10, "structured generator needs n_max >= 10");
  Rng rng(seed);
  Graph g;
  switch (uniform_below(rng, 5)) {
    case 0:
    case 1: {
      const int n = uniform_between(rng, 5, n_max);
      const double p = 0.05 + 0.5 * uniform01(rng);
      g = Graph(n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (uniform01(rng) < p) g.add_edge(u, v);
      break;
    }
    case 2: {
      const int m = uniform_between(rng, 1, std::min(4, (n_max - 5) / 5));
      const int room = n_max - 5 - 5 * m;
      const int joined = uniform_between(rng, 0, std::min(3, room));
      const int independent = uniform_between(rng, 0, std::min(2, room - joined));
      g = perturbed_blowup(m, joined, independent, rng);
      break;
    }
    case 3: {
      const int extra = uniform_between(rng, 0, std::min(11, n_max - 10));
      g = grow(pentagon_k4_core(), extra, 0.2 + 0.6 * uniform01(rng), rng);
      break;
    }
    default: {
      const int n = uniform_between(rng, 5, std::min(12, n_max));
      const int extra = uniform_between(rng, 0, std::min(4, n_max - n));
      g = grow(antihole(n), extra, 0.2 + 0.6 * uniform01(rng), rng);
      break;
    }
  }
  return repair_to_2k2_free(std::move(g), rng);
}

}  // namespace domhad::gen
