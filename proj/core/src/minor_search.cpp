#include <string>
#include <unordered_set>
#include <vector>

#include "connected_sets_impl.hpp"
#include "domhad/error.hpp"
#include "domhad/exact.hpp"

namespace domhad {

namespace {

void require_cap(const Graph& g, const SearchLimits& limits) {
  if (g.order() > limits.max_vertices)
    throw CapacityError("exact minor search capped at " + std::to_string(limits.max_vertices) + " vertices, got " +
                        std::to_string(g.order()));
}

MinorModel clique_model(const VertexSet& clique, int t) {
  MinorModel m;
  for (int v : clique) {
    if (static_cast<int>(m.size()) == t) break;
    m.push_back(VertexSet{v});
  }
  return m;
}

// Builds T1, T2, ... in order. The only state that matters for the remaining
// sets is the pool of unused vertices dominated by every chosen set, so failed
// pools are memoized per number of sets still to place.
class DominatingSearch {
 public:
  DominatingSearch(const Graph& g, int t, const Deadline& deadline)
      : g_(g), t_(t), deadline_(deadline), failed_(static_cast<std::size_t>(t) + 1) {}

  std::optional<MinorModel> run() {
    if (!extend(t_, g_.vertices())) return std::nullopt;
    return MinorModel(chosen_);
  }

 private:
  bool extend(int remaining, const VertexSet& pool) {
    deadline_.tick();
    if (remaining == 0) return true;
    if (pool.size() < remaining) return false;
    if (remaining == 1) {
      chosen_.push_back(VertexSet{pool.first()});
      return true;
    }
    if (remaining == 2) {
      // Two more sets fit iff the pool spans an edge: the first of them must be
      // a singleton once the pool has no edges.
      for (int u : pool) {
        int w = (g_.neighbors(u) & pool).first();
        if (w != -1) {
          chosen_.push_back(VertexSet{u});
          chosen_.push_back(VertexSet{w});
          return true;
        }
      }
      return false;
    }
    auto& failed = failed_[static_cast<std::size_t>(remaining)];
    if (failed.contains(pool)) return false;

    bool found = false;
    const int max_size = pool.size() - (remaining - 1);
    detail::visit_connected_sets(g_, pool, max_size, [&](const VertexSet& s) {
      VertexSet next = (pool - s) & neighborhood(g_, s);
      if (next.size() < remaining - 1) return true;
      chosen_.push_back(s);
      if (extend(remaining - 1, next)) {
        found = true;
        return false;
      }
      chosen_.pop_back();
      return true;
    });
    if (!found) failed.insert(pool);
    return found;
  }

  const Graph& g_;
  int t_;
  const Deadline& deadline_;
  std::vector<VertexSet> chosen_;
  std::vector<std::unordered_set<VertexSet, VertexSetHash>> failed_;
};

// Ordinary clique minor: branch sets chosen in increasing order of their least
// vertex, each touching all earlier sets.
class OrdinarySearch {
 public:
  OrdinarySearch(const Graph& g, int t, const Deadline& deadline) : g_(g), t_(t), deadline_(deadline) {}

  std::optional<MinorModel> run() {
    if (!extend(t_, g_.vertices())) return std::nullopt;
    return MinorModel(chosen_);
  }

 private:
  bool extend(int remaining, const VertexSet& avail) {
    deadline_.tick();
    if (remaining == 0) return true;
    if (avail.size() < remaining) return false;
    for (const auto& reach : reach_)
      if ((reach & avail).size() < remaining) return false;

    bool found = false;
    const int max_size = avail.size() - (remaining - 1);
    detail::visit_connected_sets(g_, avail, max_size, [&](const VertexSet& s) {
      for (const auto& reach : reach_)
        if (!reach.intersects(s)) return true;
      VertexSet next = avail - s - VertexSet::range(s.first() + 1);
      chosen_.push_back(s);
      reach_.push_back(neighborhood(g_, s));
      if (extend(remaining - 1, next)) {
        found = true;
        return false;
      }
      reach_.pop_back();
      chosen_.pop_back();
      return true;
    });
    return found;
  }

  const Graph& g_;
  int t_;
  const Deadline& deadline_;
  std::vector<VertexSet> chosen_;
  std::vector<VertexSet> reach_;
};

}  // namespace

std::optional<MinorModel> has_dominating_kt(const Graph& g, int t, const SearchLimits& limits) {
  if (t < 1) throw ArgumentError("dominating K_t search needs t >= 1");
  require_cap(g, limits);
  if (t > g.order()) return std::nullopt;
  CliqueResult omega = clique_number(g, limits.deadline);
  if (omega.size >= t) return clique_model(omega.vertices, t);
  return DominatingSearch(g, t, limits.deadline).run();
}

std::optional<MinorModel> find_kt_minor(const Graph& g, int t, const SearchLimits& limits) {
  if (t < 1) throw ArgumentError("K_t minor search needs t >= 1");
  require_cap(g, limits);
  if (t > g.order()) return std::nullopt;
  CliqueResult omega = clique_number(g, limits.deadline);
  if (omega.size >= t) return clique_model(omega.vertices, t);
  return OrdinarySearch(g, t, limits.deadline).run();
}

namespace {

template <class Probe>
HadwigerResult probe_upward(const Graph& g, const SearchLimits& limits, Probe probe) {
  require_cap(g, limits);
  HadwigerResult out;
  if (g.order() == 0) return out;
  CliqueResult omega = clique_number(g, limits.deadline);
  out.value = omega.size;
  out.witness = clique_model(omega.vertices, omega.size);
  for (int t = omega.size + 1; t <= g.order(); ++t) {
    auto m = probe(t);
    if (!m) break;
    out.value = t;
    out.witness = std::move(*m);
  }
  return out;
}

}  // namespace

HadwigerResult dominating_hadwiger_number(const Graph& g, const SearchLimits& limits) {
  return probe_upward(g, limits, [&](int t) { return has_dominating_kt(g, t, limits); });
}

HadwigerResult hadwiger_number(const Graph& g, const SearchLimits& limits) {
  return probe_upward(g, limits, [&](int t) { return find_kt_minor(g, t, limits); });
}

}  // namespace domhad
