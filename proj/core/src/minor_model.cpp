#include "domhad/minor_model.hpp"

#include <json.hpp>

#include "domhad/error.hpp"

namespace domhad {

MinorModel MinorModel::suffix(std::size_t count) const {
  if (count >= sets_.size()) return *this;
  return MinorModel(std::vector<VertexSet>(sets_.end() - static_cast<std::ptrdiff_t>(count), sets_.end()));
}

VertexSet MinorModel::support() const {
  VertexSet all;
  for (const auto& s : sets_) all |= s;
  return all;
}

std::vector<std::vector<int>> MinorModel::to_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(sets_.size());
  for (const auto& s : sets_) out.push_back(s.to_vector());
  return out;
}

MinorModel MinorModel::from_lists(const std::vector<std::vector<int>>& lists) {
  MinorModel m;
  for (const auto& l : lists) {
    VertexSet s;
    for (int v : l) {
      if (v < 0 || v >= kMaxVertices) throw ArgumentError("vertex id " + std::to_string(v) + " out of range");
      s.insert(v);
    }
    m.push_back(s);
  }
  return m;
}

std::string to_json(const MinorModel& m) { return nlohmann::json(m.to_lists()).dump(); }

MinorModel model_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ArgumentError(std::string("malformed model JSON: ") + e.what());
  }
  if (!j.is_array()) throw ArgumentError("model JSON must be an array of arrays");
  std::vector<std::vector<int>> lists;
  for (const auto& set : j) {
    if (!set.is_array()) throw ArgumentError("model JSON must be an array of arrays");
    std::vector<int> l;
    for (const auto& v : set) {
      if (!v.is_number_integer()) throw ArgumentError("model JSON entries must be integers");
      l.push_back(v.get<int>());
    }
    lists.push_back(std::move(l));
  }
  return MinorModel::from_lists(lists);
}

std::string ModelReport::condition() const {
  switch (violation) {
    case Violation::kNone: return "valid";
    case Violation::kOutOfRange: return "range";
    case Violation::kEmptySet: return "non-empty";
    case Violation::kOverlap: return "disjointness";
    case Violation::kDisconnected: return "connectivity";
    case Violation::kNotDominated: return "domination";
    case Violation::kNotAdjacent: return "adjacency";
  }
  return "unknown";
}

std::string ModelReport::describe() const {
  switch (violation) {
    case Violation::kNone: return "valid";
    case Violation::kOutOfRange: return "T" + std::to_string(i) + " contains out-of-range vertex " + std::to_string(witness);
    case Violation::kEmptySet: return "T" + std::to_string(i) + " is empty";
    case Violation::kOverlap:
      return "T" + std::to_string(i) + " and T" + std::to_string(j) + " share vertex " + std::to_string(witness);
    case Violation::kDisconnected: return "T" + std::to_string(i) + " is not connected";
    case Violation::kNotDominated:
      return "vertex " + std::to_string(witness) + " in T" + std::to_string(j) + " has no neighbor in T" +
             std::to_string(i);
    case Violation::kNotAdjacent:
      return "no edge between T" + std::to_string(i) + " and T" + std::to_string(j);
  }
  return "unknown";
}

namespace {

ModelReport check_sets(const Graph& g, const MinorModel& m) {
  using V = ModelReport::Violation;
  const VertexSet universe = g.vertices();
  for (std::size_t a = 0; a < m.size(); ++a) {
    const int i = static_cast<int>(a) + 1;
    VertexSet outside = m[a] - universe;
    if (!outside.empty()) return {V::kOutOfRange, i, 0, outside.first()};
    if (m[a].empty()) return {V::kEmptySet, i, 0, -1};
  }
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      VertexSet common = m[a] & m[b];
      if (!common.empty()) return {V::kOverlap, static_cast<int>(a) + 1, static_cast<int>(b) + 1, common.first()};
    }
  for (std::size_t a = 0; a < m.size(); ++a)
    if (!is_connected_set(g, m[a])) return {V::kDisconnected, static_cast<int>(a) + 1, 0, m[a].first()};
  return {};
}

}  // namespace

ModelReport verify_dominating_model(const Graph& g, const MinorModel& m) {
  if (auto r = check_sets(g, m); !r.valid()) return r;
  for (std::size_t a = 0; a < m.size(); ++a) {
    const VertexSet reach = neighborhood(g, m[a]);
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      VertexSet missed = m[b] - reach;
      if (!missed.empty())
        return {ModelReport::Violation::kNotDominated, static_cast<int>(a) + 1, static_cast<int>(b) + 1,
                missed.first()};
    }
  }
  return {};
}

ModelReport verify_ordinary_model(const Graph& g, const MinorModel& m) {
  if (auto r = check_sets(g, m); !r.valid()) return r;
  for (std::size_t a = 0; a < m.size(); ++a) {
    const VertexSet reach = neighborhood(g, m[a]);
    for (std::size_t b = a + 1; b < m.size(); ++b)
      if (!reach.intersects(m[b]))
        return {ModelReport::Violation::kNotAdjacent, static_cast<int>(a) + 1, static_cast<int>(b) + 1, -1};
  }
  return {};
}

}  // namespace domhad
