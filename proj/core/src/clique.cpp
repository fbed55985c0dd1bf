#include <vector>

#include "domhad/exact.hpp"

namespace domhad {

namespace {

// Branch and bound with a greedy coloring bound on the candidate set.
class MaxClique {
 public:
  MaxClique(const Graph& g, const Deadline& deadline) : g_(g), deadline_(deadline) {}

  CliqueResult run() {
    VertexSet current;
    expand(current, 0, g_.vertices());
    return {best_size_, best_};
  }

 private:
  void expand(VertexSet& current, int size, VertexSet cand) {
    deadline_.tick();
    std::vector<int> order;
    std::vector<int> bound;
    VertexSet uncolored = cand;
    for (int color = 1; !uncolored.empty(); ++color) {
      VertexSet cls = uncolored;
      while (!cls.empty()) {
        int v = cls.first();
        cls -= g_.neighbors(v);
        cls.erase(v);
        uncolored.erase(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + bound[i] <= best_size_) return;
      const int v = order[i];
      current.insert(v);
      VertexSet next = cand & g_.neighbors(v);
      if (next.empty()) {
        if (size + 1 > best_size_) {
          best_size_ = size + 1;
          best_ = current;
        }
      } else {
        expand(current, size + 1, next);
      }
      current.erase(v);
      cand.erase(v);
    }
  }

  const Graph& g_;
  const Deadline& deadline_;
  int best_size_ = 0;
  VertexSet best_;
};

}  // namespace

CliqueResult clique_number(const Graph& g, const Deadline& deadline) { return MaxClique(g, deadline).run(); }

CliqueResult independence_number(const Graph& g, const Deadline& deadline) {
  return clique_number(complement(g), deadline);
}

}  // namespace domhad
