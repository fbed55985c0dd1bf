#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

#ifndef DOMHAD_MAX_VERTICES
#define DOMHAD_MAX_VERTICES 512
#endif

namespace domhad {

inline constexpr int kMaxVertices = DOMHAD_MAX_VERTICES;

/// Fixed-capacity bitset over vertex ids [0, kMaxVertices).
class VertexSet {
 public:
  static constexpr int kWords = (kMaxVertices + 63) / 64;
  using Word = std::uint64_t;

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> vertices);

  /// {0, 1, ..., n-1}
  static VertexSet range(int n);
  static VertexSet from(const std::vector<int>& vertices);

  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void insert(int v) { words_[v >> 6] |= Word{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(Word{1} << (v & 63)); }

  int size() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest member, or -1.
  int first() const { return next(-1); }
  /// Smallest member strictly greater than `after`, or -1.
  int next(int after) const;
  /// Largest member, or -1.
  int last() const;

  bool intersects(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool subset_of(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.to_vector() <=> b.to_vector(); }

  /// {0..n-1} minus this set.
  VertexSet complement_within(int n) const { return range(n) - *this; }

  std::vector<int> to_vector() const;
  std::size_t hash() const;

  const std::array<Word, kWords>& words() const { return words_; }

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    const_iterator() = default;
    const_iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
    int operator*() const { return v_; }
    const_iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    const_iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) { return a.v_ == b.v_; }

   private:
    const VertexSet* set_ = nullptr;
    int v_ = -1;
  };

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, -1}; }

 private:
  std::array<Word, kWords> words_{};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace domhad
