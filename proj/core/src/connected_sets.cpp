#include "connected_sets_impl.hpp"
#include "domhad/exact.hpp"

namespace domhad {

void for_each_connected_set(const Graph& g, const VertexSet& within, int max_size,
                            const std::function<bool(const VertexSet&)>& visit) {
  detail::visit_connected_sets(g, within & g.vertices(), max_size, visit);
}

std::vector<VertexSet> enumerate_connected_sets(const Graph& g, const VertexSet& within, int max_size) {
  std::vector<VertexSet> out;
  for_each_connected_set(g, within, max_size, [&](const VertexSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace domhad
