#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "domhad/graph.hpp"
#include "domhad/minor_model.hpp"

namespace domhad {

/// Default vertex cap for the exponential minor searches.
inline constexpr int kDefaultExactCap = 16;

/// Optional wall-clock deadline polled by the exact searches; expiry throws TimeoutError.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(Clock::time_point at) : at_(at) {}
  static Deadline after(std::chrono::milliseconds budget) { return Deadline(Clock::now() + budget); }

  bool unlimited() const { return !at_.has_value(); }
  /// Cheap poll: only reads the clock every 1024 calls.
  void tick() const {
    if (at_ && (++ticks_ & 1023) == 0) check();
  }
  void check() const;

 private:
  std::optional<Clock::time_point> at_;
  mutable std::uint64_t ticks_ = 0;
};

struct SearchLimits {
  int max_vertices = kDefaultExactCap;
  Deadline deadline;
};

// ---- coloring ---------------------------------------------------------------

struct Coloring {
  std::vector<int> color;
  int k = 0;
};

bool is_proper_coloring(const Graph& g, const Coloring& c);

/// DSATUR greedy coloring (upper bound).
Coloring dsatur_coloring(const Graph& g);

/// A proper coloring with at most k colors, or nullopt when the exhaustive
/// DSATUR-ordered backtracking proves none exists.
std::optional<Coloring> k_coloring(const Graph& g, int k, const Deadline& deadline = {});

struct ChromaticResult {
  int chi = 0;
  Coloring coloring;
};

/// Exact chromatic number: per connected component, tries k = omega..greedy-1.
ChromaticResult chromatic_number(const Graph& g, const Deadline& deadline = {});

// ---- cliques ----------------------------------------------------------------

struct CliqueResult {
  int size = 0;
  VertexSet vertices;
};

CliqueResult clique_number(const Graph& g, const Deadline& deadline = {});
/// Maximum independent set, via clique_number on the complement.
CliqueResult independence_number(const Graph& g, const Deadline& deadline = {});

// ---- connected sets ---------------------------------------------------------

/// Visits every connected non-empty subset of `within` with at most `max_size`
/// vertices exactly once, grouped by least vertex in increasing order. Return
/// false from the visitor to stop.
void for_each_connected_set(const Graph& g, const VertexSet& within, int max_size,
                            const std::function<bool(const VertexSet&)>& visit);
std::vector<VertexSet> enumerate_connected_sets(const Graph& g, const VertexSet& within, int max_size);

// ---- clique minors ----------------------------------------------------------

/// A dominating K_t model with exactly t sets, or nullopt. Throws CapacityError
/// above limits.max_vertices and TimeoutError past the deadline.
std::optional<MinorModel> has_dominating_kt(const Graph& g, int t, const SearchLimits& limits = {});

/// An ordinary K_t model (pairwise adjacent connected sets), or nullopt.
std::optional<MinorModel> find_kt_minor(const Graph& g, int t, const SearchLimits& limits = {});
inline bool has_kt_minor(const Graph& g, int t, const SearchLimits& limits = {}) {
  return find_kt_minor(g, t, limits).has_value();
}

struct HadwigerResult {
  int value = 0;
  MinorModel witness;
};

/// Largest t with a dominating K_t model; probes upward from the clique number.
HadwigerResult dominating_hadwiger_number(const Graph& g, const SearchLimits& limits = {});
/// Largest t with an ordinary K_t minor.
HadwigerResult hadwiger_number(const Graph& g, const SearchLimits& limits = {});

}  // namespace domhad
