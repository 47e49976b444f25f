#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace gpab {

// Fixed-capacity bitset of vertex indices. Large enough for extended graphs.
class VertexSet {
 public:
  static constexpr int kCapacity = 256;

  VertexSet() = default;
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) insert(v);
  }

  static VertexSet range(int n) {
    VertexSet s;
    for (int i = 0; i < n; ++i) s.insert(i);
    return s;
  }

  void insert(int v) { words_[v >> 6] |= uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }
  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool subset_of(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  int first() const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
    return -1;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.to_vector() <=> b.to_vector();
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i = 0; i < kWords; ++i) {
      uint64_t w = words_[i];
      while (w) {
        out.push_back(i * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
    return out;
  }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    iterator(const VertexSet* s, int pos) : s_(s), pos_(pos) { advance(); }
    int operator*() const { return pos_; }
    iterator& operator++() {
      ++pos_;
      advance();
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    bool operator==(const iterator& o) const { return pos_ == o.pos_; }
    bool operator!=(const iterator& o) const { return pos_ != o.pos_; }

   private:
    void advance() {
      while (pos_ < kCapacity) {
        uint64_t w = s_->words_[pos_ >> 6] >> (pos_ & 63);
        if (w) {
          pos_ += std::countr_zero(w);
          return;
        }
        pos_ = ((pos_ >> 6) + 1) << 6;
      }
      pos_ = kCapacity;
    }
    const VertexSet* s_ = nullptr;
    int pos_ = kCapacity;
  };
  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, kCapacity); }

 private:
  static constexpr int kWords = kCapacity / 64;
  std::array<uint64_t, kWords> words_{};
};

}  // namespace gpab
