#include "domhad/vertex_set.hpp"

#include "domhad/error.hpp"

namespace domhad {

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) insert(v);
}

VertexSet VertexSet::range(int n) {
  VertexSet s;
  int full = n >> 6;
  for (int i = 0; i < full; ++i) s.words_[i] = ~Word{0};
  if (n & 63) s.words_[full] = (Word{1} << (n & 63)) - 1;
  return s;
}

VertexSet VertexSet::from(const std::vector<int>& vertices) {
  VertexSet s;
  for (int v : vertices) s.insert(v);
  return s;
}

int VertexSet::next(int after) const {
  int v = after + 1;
  if (v >= kMaxVertices) return -1;
  int i = v >> 6;
  Word w = words_[i] & (~Word{0} << (v & 63));
  while (true) {
    if (w) return (i << 6) + std::countr_zero(w);
    if (++i == kWords) return -1;
    w = words_[i];
  }
}

int VertexSet::last() const {
  for (int i = kWords - 1; i >= 0; --i)
    if (words_[i]) return (i << 6) + 63 - std::countl_zero(words_[i]);
  return -1;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for (int v : *this) out.push_back(v);
  return out;
}

std::size_t VertexSet::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (Word w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

NotTwoK2FreeError::NotTwoK2FreeError(std::vector<int> witness)
    : Error("graph is not 2K2-free: induced 2K2 on {" + join(witness) + "}"), witness_(std::move(witness)) {}

ExtractionError::ExtractionError(std::string claim, std::vector<int> witness, const std::string& detail)
    : Error("extraction invariant failed [" + claim + "] witness {" + join(witness) + "}: " + detail),
      claim_(std::move(claim)),
      witness_(std::move(witness)) {}

}  // namespace domhad
