#include "domhad/extraction.hpp"

#include <algorithm>
#include <json.hpp>

#include "domhad/error.hpp"
#include "domhad/exact.hpp"
#include "extraction_impl.hpp"

namespace domhad {

std::string_view branch_name(Branch b) {
  switch (b) {
    case Branch::kEmpty: return "empty";
    case Branch::kChiOne: return "chi-1";
    case Branch::kChiTwo: return "chi-2";
    case Branch::kSplitFallback: return "split-fallback";
    case Branch::kCliqueShortcut: return "clique-shortcut";
    case Branch::kClaim1Completed: return "claim1-completed";
    case Branch::kClaim1Structure: return "claim1-structure";
    case Branch::kC4Reduction: return "c4-reduction";
    case Branch::kClaim3Construction: return "claim3-construction";
    case Branch::kYEmpty: return "y-empty";
    case Branch::kYSingleton: return "y-singleton";
    case Branch::kYNextEmpty: return "y-next-empty";
    case Branch::kClaim8: return "claim8";
    case Branch::kFinalEven: return "final-even";
    case Branch::kFinalOdd: return "final-odd";
    case Branch::kMicuPath: return "micu-p4";
    case Branch::kMicuCograph: return "micu-cograph";
  }
  return "unknown";
}

std::string to_json_line(const TraceEvent& e) {
  nlohmann::json j;
  j["claim"] = branch_name(e.branch);
  j["context"] = e.context;
  j["depth"] = e.depth;
  j["n"] = e.n;
  j["chi"] = e.chi;
  j["removed"] = e.removed.to_vector();
  std::vector<std::vector<int>> pre;
  for (const auto& s : e.prepended) pre.push_back(s.to_vector());
  j["prepended"] = pre;
  return j.dump();
}

MinorModel lift_model(const Graph& g, const std::vector<VertexSet>& prefix, const MinorModel& residual, int quota) {
  if (quota < 0) throw ArgumentError("negative residual quota");
  if (static_cast<std::size_t>(quota) > residual.size())
    throw ExtractionError("lift", {},
                          "residual model has " + std::to_string(residual.size()) + " sets but " +
                              std::to_string(quota) + " are required");
  MinorModel kept = residual.suffix(static_cast<std::size_t>(quota));
  const VertexSet kept_support = kept.support();
  std::vector<VertexSet> out = prefix;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i].intersects(kept_support))
      throw ExtractionError("lift", (prefix[i] & kept_support).to_vector(), "prefix set overlaps the residual model");
    VertexSet missed = kept_support - neighborhood(g, prefix[i]);
    if (!missed.empty())
      throw ExtractionError("lift", {missed.first()},
                            "residual vertex has no neighbor in prefix set D" + std::to_string(i + 1));
  }
  for (const auto& s : kept.sets()) out.push_back(s);
  return MinorModel(std::move(out));
}

namespace detail {

namespace {

int mod5(int k) { return ((k % 5) + 5) % 5; }

}  // namespace

Extractor::Extractor(const ExtractOptions& options) : opts_(options) {}

void Extractor::fail(std::string_view claim, const Frame& f, std::vector<int> witness, const std::string& detail) const {
  for (int& v : witness)
    if (v >= 0 && v < static_cast<int>(f.root.size())) v = f.root[v];
  throw ExtractionError(std::string(claim), std::move(witness),
                        detail + " (depth " + std::to_string(f.depth) + ", n=" + std::to_string(f.g.order()) +
                            ", chi=" + std::to_string(f.chi) + ")");
}

void Extractor::emit(const Frame& f, Branch b, std::string_view context, const VertexSet& removed,
                     const std::vector<VertexSet>& prefix) const {
  if (!opts_.trace) return;
  auto to_root = [&](const VertexSet& s) {
    VertexSet r;
    for (int v : s) r.insert(f.root[v]);
    return r;
  };
  TraceEvent e;
  e.branch = b;
  e.context = std::string(context);
  e.depth = f.depth;
  e.n = f.g.order();
  e.chi = f.chi;
  e.removed = to_root(removed);
  for (const auto& s : prefix) e.prepended.push_back(to_root(s));
  opts_.trace(e);
}

MinorModel Extractor::finish(const Frame& f, const MinorModel& model) const {
  if (static_cast<int>(model.size()) < f.chi)
    fail("chi-bookkeeping", f, {},
         "built " + std::to_string(model.size()) + " sets, need " + std::to_string(f.chi));
  MinorModel out = model.suffix(static_cast<std::size_t>(f.chi));
  if (opts_.verify_intermediate) {
    ModelReport r = verify_dominating_model(f.g, out);
    if (!r.valid()) fail("verify", f, {r.witness}, r.describe());
  }
  return out;
}

MinorModel Extractor::recurse(const Frame& f, const VertexSet& keep) {
  if (keep.size() >= f.g.order()) fail("progress", f, {}, "recursive call does not shrink the graph");
  InducedSubgraph sub = induced_subgraph(f.g, keep);
  std::vector<int> root(sub.to_parent.size());
  for (std::size_t i = 0; i < root.size(); ++i) root[i] = f.root[sub.to_parent[i]];
  MinorModel inner = solve(sub.graph, f.depth + 1, root);
  MinorModel out;
  for (const auto& s : inner.sets()) out.push_back(sub.lift(s));
  return out;
}

MinorModel Extractor::close(const Frame& f, Branch b, std::string_view context, const VertexSet& removed,
                            const std::vector<VertexSet>& prefix) {
  const VertexSet rest = f.g.vertices() - removed;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    VertexSet missed = rest - neighborhood(f.g, prefix[i]);
    if (!missed.empty())
      fail(branch_name(b), f, {missed.first()},
           "remaining vertex has no neighbor in D" + std::to_string(i + 1));
  }
  emit(f, b, context, removed, prefix);
  MinorModel residual = rest.empty() ? MinorModel{} : recurse(f, rest);
  const int quota = std::max(0, f.chi - static_cast<int>(prefix.size()));
  MinorModel lifted;
  try {
    lifted = lift_model(f.g, prefix, residual, quota);
  } catch (const ExtractionError& e) {
    fail(branch_name(b), f, {}, e.what());
  }
  return finish(f, lifted);
}

Frame Extractor::frame(const Graph& g, int depth, const std::vector<int>& root) const {
  return Frame{g, chromatic_number(g).chi, depth, root};
}

MinorModel Extractor::solve(const Graph& g, int depth, const std::vector<int>& root) {
  if (g.order() == 0) {
    Frame f{g, 0, depth, root};
    emit(f, Branch::kEmpty, "base", {}, {});
    return {};
  }
  const Frame f = frame(g, depth, root);
  if (f.chi == 1) {
    std::vector<VertexSet> block{VertexSet{0}};
    emit(f, Branch::kChiOne, "base", {}, block);
    return MinorModel(block);
  }
  if (f.chi == 2) {
    auto [u, v] = g.edges().front();
    std::vector<VertexSet> block{VertexSet{u}, VertexSet{v}};
    emit(f, Branch::kChiTwo, "base", {}, block);
    return MinorModel(block);
  }
  const auto c5 = find_induced_cycle(g, 5);
  const auto c4 = find_induced_cycle(g, 4);
  if (!c5 && !c4) return split_model(f);

  CliqueResult omega = clique_number(g);
  if (omega.size >= f.chi) {
    std::vector<VertexSet> block;
    for (int v : omega.vertices) block.push_back(VertexSet{v});
    emit(f, Branch::kCliqueShortcut, "base", {}, block);
    return finish(f, MinorModel(block));
  }

  if (!c5) {
    if (auto banner = find_banner(g)) {
      ClaimOutcome out = claim1(f, *banner, "c5-free");
      if (auto* m = std::get_if<MinorModel>(&out)) return *m;
      const auto& s = std::get<BannerStructure>(out);
      fail("claim1-dichotomy", f, {s.b4, s.b5}, "banner structure found in a C5-free graph");
    }
    return c4_reduction(f, *c4);
  }

  if (auto pair = low_degree_pair(g, f)) return low_degree(f, pair->c5, pair->x);

  PartitionOutcome part = partition(f, *c5);
  if (auto* m = std::get_if<MinorModel>(&part)) return *m;
  return final_block(f, std::get<C5Partition>(part));
}

std::optional<LowDegreePair> Extractor::low_degree_pair(const Graph& g, const Frame& f) const {
  try {
    return find_low_degree_c5_pair(g, opts_.c5_cap);
  } catch (const CapacityError& e) {
    fail("claim3-cap", f, {}, e.what());
  }
}

ClaimOutcome Extractor::claim1(const Frame& f, const Embedding& banner, std::string_view context) {
  const Graph& g = f.g;
  if (!is_induced_embedding(g, Pattern::banner(), banner))
    fail("claim1-banner", f, banner.image, "expected an induced banner");
  const int b1 = banner[0], b2 = banner[1], b3 = banner[2], b = banner[3], bp = banner[4];
  const VertexSet body = banner.vertices();
  const VertexSet rest = g.vertices() - body;

  // `end` is b1 when looking for b5 and b3 when looking for b4; `other` is the opposite end.
  auto side = [&](int end, int other) -> std::variant<int, MinorModel> {
    const VertexSet d1{end, b, bp};
    const VertexSet d2{b2, other};
    const VertexSet a1 = rest - neighborhood(g, d1);
    const VertexSet a2 = (rest - a1) - neighborhood(g, d2);
    VertexSet found = a2 & g.neighbors(b) & g.neighbors(end);
    found -= g.neighbors(bp);
    if (!found.empty()) return found.first();
    return close(f, Branch::kClaim1Completed, context, body | a1 | a2, {d1, d2});
  };

  auto five = side(b1, b3);
  if (auto* m = std::get_if<MinorModel>(&five)) return *m;
  auto four = side(b3, b1);
  if (auto* m = std::get_if<MinorModel>(&four)) return *m;
  const int b5 = std::get<int>(five);
  const int b4 = std::get<int>(four);
  if (b4 == b5 || !g.adjacent(b4, b5))
    fail("claim1", f, {b1, b2, b3, b, bp, b4, b5}, "b4 and b5 are not adjacent");
  emit(f, Branch::kClaim1Structure, context, {}, {});
  return BannerStructure{b4, b5};
}

MinorModel Extractor::c4_reduction(const Frame& f, const Embedding& c4) {
  const Graph& g = f.g;
  const VertexSet cyc = c4.vertices();
  const VertexSet indep = (g.vertices() - cyc) - neighborhood(g, cyc);
  const VertexSet h = g.vertices() - cyc - indep;
  const std::vector<VertexSet> splits[2] = {{VertexSet{c4[0], c4[1]}, VertexSet{c4[2], c4[3]}},
                                            {VertexSet{c4[0], c4[3]}, VertexSet{c4[1], c4[2]}}};
  for (const auto& split : splits) {
    if (h.subset_of(neighborhood(g, split[0]) & neighborhood(g, split[1])))
      return close(f, Branch::kC4Reduction, "c5-free", cyc | indep, split);
  }
  VertexSet x = h - (neighborhood(g, splits[0][0]) & neighborhood(g, splits[0][1]));
  VertexSet y = h - (neighborhood(g, splits[1][0]) & neighborhood(g, splits[1][1]));
  fail("claim2", f, {c4[0], c4[1], c4[2], c4[3], x.first(), y.first()}, "neither split of the C4 dominates H");
}

MinorModel Extractor::split_model(const Frame& f) {
  CliqueResult omega = clique_number(f.g);
  if (omega.size != f.chi)
    fail("split-perfect", f, omega.vertices.to_vector(), "clique number differs from chromatic number");
  std::vector<VertexSet> block;
  for (int v : omega.vertices) block.push_back(VertexSet{v});
  emit(f, Branch::kSplitFallback, "c4-c5-free", {}, block);
  return finish(f, MinorModel(block));
}

MinorModel Extractor::low_degree(const Frame& f, const Embedding& c5, int x) {
  const Graph& g = f.g;
  // Orient the cycle as v1..v5 with x ~ v1, v3 and x !~ v2, v4.
  std::array<int, 5> v{};
  bool oriented = false;
  for (int r = 0; r < 5 && !oriented; ++r)
    for (int d : {1, -1}) {
      std::array<int, 5> w{};
      for (int k = 0; k < 5; ++k) w[k] = c5[mod5(r + d * k)];
      if (g.adjacent(x, w[0]) && g.adjacent(x, w[2]) && !g.adjacent(x, w[1]) && !g.adjacent(x, w[3])) {
        v = w;
        oriented = true;
        break;
      }
    }
  if (!oriented) fail("claim3-normalize", f, {x, c5[0], c5[1], c5[2], c5[3], c5[4]}, "no orientation fits x");
  const int v1 = v[0], v2 = v[1], v3 = v[2], v4 = v[3], v5 = v[4];

  ClaimOutcome first = claim1(f, Embedding{{x, v1, v2, v3, v4}}, "claim3/first-banner");
  if (auto* m = std::get_if<MinorModel>(&first)) return *m;
  const int z = std::get<BannerStructure>(first).b4;
  const int y = std::get<BannerStructure>(first).b5;

  if (g.adjacent(x, v5)) fail("claim3-minimality", f, {x, y}, "x sees v5 although y has fewer cycle neighbors");

  ClaimOutcome second = claim1(f, Embedding{{x, v3, v2, v1, v5}}, "claim3/second-banner");
  if (auto* m = std::get_if<MinorModel>(&second)) return *m;
  const int u = std::get<BannerStructure>(second).b4;
  const int w = std::get<BannerStructure>(second).b5;

  const int quad[4] = {y, z, u, w};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!g.adjacent(quad[i], quad[j])) fail("claim3-k4", f, {y, z, u, w}, "{y,z,u,w} is not a clique");
  if (!g.adjacent(v4, u) || !g.adjacent(v4, w)) fail("claim3-forced", f, {v4, u, w}, "v4 not complete to {u,w}");
  if (!g.adjacent(v5, y) || !g.adjacent(v5, z)) fail("claim3-forced", f, {v5, y, z}, "v5 not complete to {y,z}");

  const std::vector<VertexSet> block{VertexSet{x, v1, v5}, VertexSet{v2, v3, v4}, VertexSet{z, u}, VertexSet{y, w}};
  if (!verify_dominating_model(g, MinorModel(block)).valid())
    fail("claim3-k4-model", f, {x, y, z, u, w}, "D1..D4 do not form a dominating K4 model");

  const VertexSet cyc = c5.vertices();
  const VertexSet indep = (g.vertices() - cyc) - neighborhood(g, cyc);
  const VertexSet s{x, y, z, u, w};
  VertexSet pool = g.vertices() - cyc - indep - s;
  VertexSet removed = cyc | indep | s;
  for (const auto& d : block) {
    VertexSet a = pool - neighborhood(g, d);
    removed |= a;
    pool -= a;
  }
  return close(f, Branch::kClaim3Construction, "claim3", removed, block);
}

PartitionOutcome Extractor::partition(const Frame& f, const Embedding& c5) {
  const Graph& g = f.g;
  const std::array<int, 5> c{c5[0], c5[1], c5[2], c5[3], c5[4]};
  const VertexSet cyc = c5.vertices();
  C5Partition p;
  p.c5 = c;
  p.independent = (g.vertices() - cyc) - neighborhood(g, cyc);
  const VertexSet h = g.vertices() - cyc - p.independent;
  p.joined = h;
  for (int i = 0; i < 5; ++i) {
    p.y[i] = h - g.neighbors(c[i]);
    p.joined -= p.y[i];
  }
  for (int hv : h)
    if ((g.neighbors(hv) & cyc).size() < 4)
      fail("claim3-global", f, {hv, c[0], c[1], c[2], c[3], c[4]}, "vertex with at most three cycle neighbors");

  // Each Y_i is a clique ...
  for (int i = 0; i < 5; ++i)
    for (int a : p.y[i]) {
      VertexSet non = p.y[i] - g.neighbors(a);
      int bv = non.next(a);
      if (bv == -1) continue;
      ClaimOutcome out = claim1(f, Embedding{{a, c[mod5(i + 3)], bv, c[mod5(i + 1)], c[i]}}, "claim5-clique");
      if (auto* m = std::get_if<MinorModel>(&out)) return *m;
      fail("claim5", f, {a, bv, std::get<BannerStructure>(out).b5}, "Y_i is not a clique");
    }

  // ... of order at least two.
  int start = -1;
  for (int i = 0; i < 5; ++i)
    if (!p.y[i].empty()) {
      start = i;
      break;
    }
  if (start == -1)
    return close(f, Branch::kYEmpty, "claim5", cyc | p.independent,
                 {VertexSet{c[0], c[1], c[2]}, VertexSet{c[3]}, VertexSet{c[4]}});
  for (int k = 0; k < 5; ++k) {
    const int i = mod5(start + k);
    const int y1 = p.y[i].first();
    const VertexSet removed = cyc | p.independent | VertexSet{y1};
    if (p.y[i].size() == 1)
      return close(f, Branch::kYSingleton, "claim5", removed,
                   {VertexSet{y1, c[mod5(i + 1)], c[mod5(i + 2)]}, VertexSet{c[mod5(i + 3)], c[mod5(i + 4)]},
                    VertexSet{c[i]}});
    if (p.y[mod5(i + 1)].empty())
      return close(f, Branch::kYNextEmpty, "claim5", removed,
                   {VertexSet{y1, c[i], c[mod5(i + 4)]}, VertexSet{c[mod5(i + 2)], c[mod5(i + 3)]},
                    VertexSet{c[mod5(i + 1)]}});
  }

  // An edge between I and Y is tried once as a banner. Its structure outcome
  // can be the cycle itself, so it is not fatal: the constructions below then
  // rely on the residual quota check in lift_model.
  for (int i = 0; i < 5; ++i)
    for (int yv : p.y[i]) {
      VertexSet hit = g.neighbors(yv) & p.independent;
      if (hit.empty()) continue;
      const int uv = hit.first();
      ClaimOutcome out = claim1(f, Embedding{{c[mod5(i - 1)], c[i], c[mod5(i + 1)], yv, uv}}, "claim4");
      if (auto* m = std::get_if<MinorModel>(&out)) return *m;
    }

  // A J vertex misses at most one vertex of each Y_i.
  for (int jv : p.joined)
    for (int i = 0; i < 5; ++i)
      if ((p.y[i] - g.neighbors(jv)).size() > 1)
        fail("claim6", f, {jv}, "J vertex misses two vertices of Y_" + std::to_string(i + 1));

  // Y_i is complete to Y_{i+-2} and misses at most one vertex of Y_{i+-1}.
  for (int i = 0; i < 5; ++i)
    for (int yv : p.y[i]) {
      if (!p.y[mod5(i + 2)].subset_of(g.neighbors(yv)) || !p.y[mod5(i - 2)].subset_of(g.neighbors(yv)))
        fail("claim7", f, {yv}, "Y_i not complete to Y_{i+-2}");
      if ((p.y[mod5(i + 1)] - g.neighbors(yv)).size() > 1 || (p.y[mod5(i - 1)] - g.neighbors(yv)).size() > 1)
        fail("claim7", f, {yv}, "Y vertex misses two vertices of a neighboring Y");
    }

  // No Y vertex is complete to a neighboring Y.
  for (int i = 0; i < 5; ++i)
    for (int yv : p.y[i])
      for (int d : {1, -1}) {
        if (!p.y[mod5(i + d)].subset_of(g.neighbors(yv))) continue;
        auto at = [&](int k) { return mod5(i + d * k); };
        const int y_next = p.y[at(1)].first();
        const int y_back = p.y[at(-2)].first();
        const VertexSet s{c[at(0)], c[at(1)], c[at(-2)], yv, y_next, y_back};
        return close(f, Branch::kClaim8, d == 1 ? "claim8/forward" : "claim8/backward", s | p.independent,
                     {VertexSet{yv, c[at(1)]}, VertexSet{y_next, c[at(-2)]}, VertexSet{y_back, c[at(0)]}});
      }

  p.m = p.y[0].size();
  for (int i = 0; i < 5; ++i) {
    if (p.y[i].size() != p.m || p.m < 2) fail("claim8", f, p.y[i].to_vector(), "Y sets differ in size");
    for (int yv : p.y[i])
      if ((p.y[mod5(i + 1)] - g.neighbors(yv)).size() != 1)
        fail("claim8", f, {yv}, "Y_i to Y_{i+1} is not (m-1)-regular");
  }

  // Every J vertex sees one of the two non-neighbors of each Y vertex.
  for (int i = 0; i < 5; ++i)
    for (int yv : p.y[i]) {
      const int prev = (p.y[mod5(i - 1)] - g.neighbors(yv)).first();
      const int next = (p.y[mod5(i + 1)] - g.neighbors(yv)).first();
      VertexSet blind = p.joined - g.neighbors(prev) - g.neighbors(next);
      if (!blind.empty()) fail("claim9", f, {blind.first(), prev, yv, next}, "J vertex anticomplete to the pair");
    }
  return p;
}

MinorModel Extractor::final_block(const Frame& f, const C5Partition& p) {
  const Graph& g = f.g;
  const int m = p.m;
  const auto& c = p.c5;
  // Index l pairs y2[l] with its unique non-neighbors y1[l] in Y1 and y3[l] in Y3.
  std::vector<int> y1, y2 = p.y[1].to_vector(), y3, y4 = p.y[3].to_vector();
  for (int a : y2) {
    y1.push_back((p.y[0] - g.neighbors(a)).first());
    y3.push_back((p.y[2] - g.neighbors(a)).first());
  }
  if (VertexSet::from(y1) != p.y[0] || VertexSet::from(y3) != p.y[2])
    fail("final-matching", f, y2, "non-neighbor maps out of Y2 are not bijections");

  const int half = m / 2;
  const bool odd = m % 2 == 1;
  std::vector<VertexSet> block;
  if (!odd) {
    block.push_back(VertexSet{c[1], c[2], c[3]});
  } else {
    block.push_back(VertexSet{c[1], c[2], y4[m - 1]});
    block.push_back(VertexSet{c[3], y2[m - 1]});
  }
  for (int j = 0; j < half; ++j) block.push_back(VertexSet{y2[2 * j], y2[2 * j + 1]});
  for (int j = 0; j < half; ++j) block.push_back(VertexSet{y4[2 * j], y4[2 * j + 1]});
  for (int l = 0; l < m; ++l) block.push_back(VertexSet{y1[l], y3[l]});
  block.push_back(VertexSet{c[0]});

  if (static_cast<int>(block.size()) != 2 * m + 2) fail("final-size", f, {}, "block does not have 2m+2 sets");
  ModelReport r = verify_dominating_model(g, MinorModel(block));
  if (!r.valid()) fail("final-block", f, {r.witness}, r.describe());

  VertexSet removed = p.independent;
  for (const auto& d : block) removed |= d;
  return close(f, odd ? Branch::kFinalOdd : Branch::kFinalEven, "final", removed, block);
}

Frame root_frame(const Graph& g, const std::vector<int>& identity) {
  return Frame{g, chromatic_number(g).chi, 0, identity};
}

std::vector<int> identity_map(int n) {
  std::vector<int> id(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id[i] = i;
  return id;
}

}  // namespace detail

namespace {

void require_2k2_free(const Graph& g) {
  if (auto w = find_2k2(g)) throw NotTwoK2FreeError(w->image);
}

}  // namespace

std::optional<LowDegreePair> find_low_degree_c5_pair(const Graph& g, std::size_t c5_cap) {
  std::optional<LowDegreePair> best;
  std::size_t seen = 0;
  for_each_induced_cycle(g, 5, [&](const Embedding& c5) {
    if (++seen > c5_cap)
      throw CapacityError("more than " + std::to_string(c5_cap) + " induced C5s; raise the cap");
    const VertexSet cyc = c5.vertices();
    for (int x : g.vertices() - cyc) {
      const int d = (g.neighbors(x) & cyc).size();
      if (d >= 1 && d <= 3 && (!best || d < best->degree)) best = LowDegreePair{c5, x, d};
    }
    // Two is the least possible count in a 2K2-free graph.
    return !(best && best->degree <= 2);
  });
  return best;
}

MinorModel extract_dominating(const Graph& g, const ExtractOptions& options) {
  require_2k2_free(g);
  detail::Extractor ex(options);
  MinorModel m = ex.solve(g, 0, detail::identity_map(g.order()));
  ModelReport r = verify_dominating_model(g, m);
  if (!r.valid()) throw ExtractionError("verify", {r.witness}, r.describe());
  return m;
}

ClaimOutcome claim1_banner_step(const Graph& g, const Embedding& banner, int chi, const ExtractOptions& options) {
  if (!is_induced_embedding(g, Pattern::banner(), banner)) throw ArgumentError("not an induced banner");
  const auto id = detail::identity_map(g.order());
  detail::Extractor ex(options);
  return ex.claim1(detail::Frame{g, chi, 0, id}, banner, "direct");
}

MinorModel c4_reduction_step(const Graph& g, const Embedding& c4, const ExtractOptions& options) {
  if (!is_induced_embedding(g, Pattern::cycle(4), c4)) throw ArgumentError("not an induced C4");
  const auto id = detail::identity_map(g.order());
  detail::Extractor ex(options);
  return ex.c4_reduction(detail::root_frame(g, id), c4);
}

MinorModel split_graph_model(const Graph& g) {
  if (!is_split_graph(g)) throw ArgumentError("graph is not a split graph");
  const auto id = detail::identity_map(g.order());
  detail::Extractor ex(ExtractOptions{});
  return ex.split_model(detail::root_frame(g, id));
}

MinorModel low_degree_c5_step(const Graph& g, const Embedding& c5, int x, const ExtractOptions& options) {
  if (!is_induced_embedding(g, Pattern::cycle(5), c5)) throw ArgumentError("not an induced C5");
  const auto id = detail::identity_map(g.order());
  detail::Extractor ex(options);
  return ex.low_degree(detail::root_frame(g, id), c5, x);
}

PartitionOutcome build_c5_partition(const Graph& g, const Embedding& c5, const ExtractOptions& options) {
  if (!is_induced_embedding(g, Pattern::cycle(5), c5)) throw ArgumentError("not an induced C5");
  const auto id = detail::identity_map(g.order());
  detail::Extractor ex(options);
  return ex.partition(detail::root_frame(g, id), c5);
}

MinorModel final_construction(const Graph& g, const C5Partition& part, const ExtractOptions& options) {
  const auto id = detail::identity_map(g.order());
  detail::Extractor ex(options);
  return ex.final_block(detail::root_frame(g, id), part);
}

}  // namespace domhad
