#include <algorithm>

#include "domhad/error.hpp"
#include "domhad/exact.hpp"
#include "domhad/extraction.hpp"

namespace domhad {

namespace {

class MicuPeeler {
 public:
  explicit MicuPeeler(const ExtractOptions& options) : opts_(options) {}

  MinorModel solve(const Graph& g, int depth, const std::vector<int>& root) {
    if (g.order() == 0) return {};
    const int chi = chromatic_number(g).chi;
    auto p4 = find_induced(g, Pattern::path(4));
    if (!p4) {
      CliqueResult omega = clique_number(g);
      if (omega.size != chi)
        throw ExtractionError("micu-perfect", lift_ids(omega.vertices.to_vector(), root),
                              "P4-free graph with clique number below chromatic number");
      std::vector<VertexSet> block;
      for (int v : omega.vertices) block.push_back(VertexSet{v});
      emit(Branch::kMicuCograph, depth, g.order(), chi, {}, block, root);
      return MinorModel(block);
    }
    const int v1 = (*p4)[0], v2 = (*p4)[1], v3 = (*p4)[2], v4 = (*p4)[3];
    const VertexSet d1{v1, v2};
    const VertexSet d2{v3, v4};
    VertexSet pool = g.vertices() - p4->vertices();
    const VertexSet a = pool - neighborhood(g, d1);
    pool -= a;
    const VertexSet b = pool - neighborhood(g, d2);
    pool -= b;
    const VertexSet removed = p4->vertices() | a | b;
    const std::vector<VertexSet> prefix{d1, d2};
    emit(Branch::kMicuPath, depth, g.order(), chi, removed, prefix, root);

    MinorModel residual;
    if (!pool.empty()) {
      InducedSubgraph sub = induced_subgraph(g, pool);
      std::vector<int> sub_root(sub.to_parent.size());
      for (std::size_t i = 0; i < sub_root.size(); ++i) sub_root[i] = root[sub.to_parent[i]];
      const MinorModel inner = solve(sub.graph, depth + 1, sub_root);
      for (const auto& s : inner.sets()) residual.push_back(sub.lift(s));
    }
    MinorModel out = lift_model(g, prefix, residual, std::max(0, chi - 2)).suffix(static_cast<std::size_t>(chi));
    if (static_cast<int>(out.size()) != chi)
      throw ExtractionError("chi-bookkeeping", {}, "micu model has " + std::to_string(out.size()) + " sets");
    if (opts_.verify_intermediate) {
      ModelReport r = verify_ordinary_model(g, out);
      if (!r.valid()) throw ExtractionError("verify", lift_ids({r.witness}, root), r.describe());
    }
    return out;
  }

 private:
  static std::vector<int> lift_ids(std::vector<int> ids, const std::vector<int>& root) {
    for (int& v : ids)
      if (v >= 0) v = root[v];
    return ids;
  }

  void emit(Branch b, int depth, int n, int chi, const VertexSet& removed, const std::vector<VertexSet>& prefix,
            const std::vector<int>& root) const {
    if (!opts_.trace) return;
    auto to_root = [&](const VertexSet& s) {
      VertexSet r;
      for (int v : s) r.insert(root[v]);
      return r;
    };
    TraceEvent e;
    e.branch = b;
    e.context = "micu";
    e.depth = depth;
    e.n = n;
    e.chi = chi;
    e.removed = to_root(removed);
    for (const auto& s : prefix) e.prepended.push_back(to_root(s));
    opts_.trace(e);
  }

  ExtractOptions opts_;
};

}  // namespace

MinorModel extract_micu_minor(const Graph& g, const ExtractOptions& options) {
  if (auto w = find_2k2(g)) throw NotTwoK2FreeError(w->image);
  std::vector<int> root(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) root[i] = i;
  MinorModel m = MicuPeeler(options).solve(g, 0, root);
  ModelReport r = verify_ordinary_model(g, m);
  if (!r.valid()) throw ExtractionError("verify", {r.witness}, r.describe());
  return m;
}

}  // namespace domhad
