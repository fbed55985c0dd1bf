#include "domhad/patterns.hpp"

#include "domhad/error.hpp"

namespace domhad {

Pattern Pattern::two_k2() {
  return {Graph::from_edge_list(4, {{0, 1}, {2, 3}}), {"a", "b", "c", "d"}};
}

Pattern Pattern::banner() {
  return {Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}}), {"b1", "b2", "b3", "b", "b'"}};
}

Pattern Pattern::cycle(int len) {
  if (len < 3) throw ArgumentError("cycle pattern needs at least 3 vertices");
  Pattern p{Graph(len), {}};
  for (int i = 0; i < len; ++i) {
    p.shape.add_edge(i, (i + 1) % len);
    p.roles.push_back("v" + std::to_string(i + 1));
  }
  return p;
}

Pattern Pattern::path(int len) {
  if (len < 1) throw ArgumentError("path pattern needs at least 1 vertex");
  Pattern p{Graph(len), {}};
  for (int i = 0; i < len; ++i) {
    if (i + 1 < len) p.shape.add_edge(i, i + 1);
    p.roles.push_back("v" + std::to_string(i + 1));
  }
  return p;
}

bool is_induced_embedding(const Graph& host, const Pattern& p, const Embedding& e) {
  const int k = p.order();
  if (static_cast<int>(e.size()) != k) return false;
  for (int r = 0; r < k; ++r) {
    if (e[r] < 0 || e[r] >= host.order()) return false;
    for (int s = 0; s < r; ++s) {
      if (e[r] == e[s]) return false;
      if (host.adjacent(e[r], e[s]) != p.shape.adjacent(r, s)) return false;
    }
  }
  return true;
}

namespace {

// Backtracking over roles in index order; candidates for role r are the host
// vertices whose adjacency to every already-placed role matches the pattern.
class InducedSearch {
 public:
  InducedSearch(const Graph& host, const Pattern& p, const std::function<bool(const Embedding&)>& visit)
      : host_(host), p_(p), visit_(visit) {
    image_.image.assign(static_cast<std::size_t>(p.order()), -1);
    min_degree_.resize(static_cast<std::size_t>(p.order()));
    for (int r = 0; r < p.order(); ++r) min_degree_[r] = p.shape.degree(r);
  }

  void run() {
    if (p_.order() > host_.order()) return;
    if (p_.order() == 0) {
      visit_(image_);
      return;
    }
    place(0, VertexSet{});
  }

 private:
  // Returns false when the visitor asked to stop.
  bool place(int role, const VertexSet& used) {
    if (role == p_.order()) return visit_(image_);
    VertexSet cand = host_.vertices() - used;
    for (int s = 0; s < role; ++s) {
      if (p_.shape.adjacent(role, s))
        cand &= host_.neighbors(image_[s]);
      else
        cand -= host_.neighbors(image_[s]);
    }
    for (int v : cand) {
      if (host_.degree(v) < min_degree_[role]) continue;
      image_.image[role] = v;
      VertexSet next = used;
      next.insert(v);
      if (!place(role + 1, next)) return false;
    }
    image_.image[role] = -1;
    return true;
  }

  const Graph& host_;
  const Pattern& p_;
  const std::function<bool(const Embedding&)>& visit_;
  Embedding image_;
  std::vector<int> min_degree_;
};

}  // namespace

void for_each_induced(const Graph& host, const Pattern& p, const std::function<bool(const Embedding&)>& visit) {
  InducedSearch(host, p, visit).run();
}

std::optional<Embedding> find_induced(const Graph& host, const Pattern& p) {
  std::optional<Embedding> found;
  for_each_induced(host, p, [&](const Embedding& e) {
    found = e;
    return false;
  });
  return found;
}

std::optional<Embedding> find_2k2(const Graph& host) {
  for (int a = 0; a < host.order(); ++a) {
    for (int b = host.neighbors(a).next(a); b != -1; b = host.neighbors(a).next(b)) {
      VertexSet far = host.vertices() - host.neighbors(a) - host.neighbors(b);
      far.erase(a);
      far.erase(b);
      for (int c : far) {
        VertexSet d_cand = host.neighbors(c) & far;
        int d = d_cand.next(c);
        if (d != -1) return Embedding{{a, b, c, d}};
      }
    }
  }
  return std::nullopt;
}

std::optional<Embedding> find_banner(const Graph& host) { return find_induced(host, Pattern::banner()); }

std::optional<Embedding> find_induced_cycle(const Graph& host, int len) {
  if (len < 4) throw ArgumentError("induced cycle length must be at least 4");
  return find_induced(host, Pattern::cycle(len));
}

void for_each_induced_cycle(const Graph& host, int len, const std::function<bool(const Embedding&)>& visit) {
  if (len < 4) throw ArgumentError("induced cycle length must be at least 4");
  Embedding path;
  path.image.resize(static_cast<std::size_t>(len));
  // `blocked` holds every path vertex and every neighbor of an interior path
  // vertex; the next vertex must avoid it so the path stays induced.
  std::function<bool(int, const VertexSet&)> extend = [&](int depth, const VertexSet& blocked) -> bool {
    const int start = path[0];
    const int tail = path[depth - 1];
    VertexSet cand = host.neighbors(tail) - blocked;
    cand -= VertexSet::range(start + 1);
    if (depth < len - 1) {
      // Interior vertices must not touch the start vertex.
      if (depth >= 2) cand -= host.neighbors(start);
      for (int v : cand) {
        path.image[depth] = v;
        VertexSet next = blocked | host.neighbors(tail);
        next.insert(v);
        if (!extend(depth + 1, next)) return false;
      }
      return true;
    }
    // Closing vertex: adjacent to start, and larger than path[1] for canonical orientation.
    cand &= host.neighbors(start);
    for (int v : cand) {
      if (v < path[1]) continue;
      path.image[depth] = v;
      if (!visit(path)) return false;
    }
    return true;
  };
  for (int s = 0; s < host.order(); ++s) {
    path.image[0] = s;
    VertexSet blocked{s};
    VertexSet second = host.neighbors(s) - VertexSet::range(s + 1);
    for (int v : second) {
      path.image[1] = v;
      VertexSet b = blocked;
      b.insert(v);
      if (!extend(2, b)) return;
    }
  }
}

bool is_split_graph(const Graph& host) {
  return is_2k2_free(host) && !find_induced_cycle(host, 4) && !find_induced_cycle(host, 5);
}

}  // namespace domhad
