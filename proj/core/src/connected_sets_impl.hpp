#pragma once

#include "domhad/graph.hpp"

namespace domhad::detail {

// ESU-style enumeration: every connected subset of `within` is produced once,
// rooted at its least vertex. The extension set only ever gains vertices that
// are exclusive neighbors of the newest vertex, which is what makes each subset
// reachable along a single path.
template <class Visit>
class ConnectedSetWalk {
 public:
  ConnectedSetWalk(const Graph& g, const VertexSet& within, int max_size, Visit& visit)
      : g_(g), within_(within), max_size_(max_size), visit_(visit) {}

  bool run() {
    if (max_size_ <= 0) return true;
    for (int v : within_) {
      VertexSet allowed = within_ - VertexSet::range(v + 1);
      VertexSet s{v};
      VertexSet closed = g_.neighbors(v);
      closed.insert(v);
      if (!grow(s, 1, g_.neighbors(v) & allowed, closed, allowed)) return false;
    }
    return true;
  }

 private:
  bool grow(VertexSet& s, int size, VertexSet ext, const VertexSet& closed, const VertexSet& allowed) {
    if (!visit_(static_cast<const VertexSet&>(s))) return false;
    if (size == max_size_) return true;
    while (!ext.empty()) {
      const int w = ext.first();
      ext.erase(w);
      VertexSet ext2 = ext | ((g_.neighbors(w) & allowed) - closed);
      VertexSet closed2 = closed | g_.neighbors(w);
      s.insert(w);
      bool go_on = grow(s, size + 1, ext2, closed2, allowed);
      s.erase(w);
      if (!go_on) return false;
    }
    return true;
  }

  const Graph& g_;
  const VertexSet& within_;
  int max_size_;
  Visit& visit_;
};

/// Returns false iff the visitor stopped the walk.
template <class Visit>
bool visit_connected_sets(const Graph& g, const VertexSet& within, int max_size, Visit&& visit) {
  ConnectedSetWalk<std::remove_reference_t<Visit>> walk(g, within, max_size, visit);
  return walk.run();
}

}  // namespace domhad::detail
