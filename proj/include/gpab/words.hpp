#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gpab/graph.hpp"

namespace gpab {

struct Syllable {
  int vertex = 0;
  int64_t exponent = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

using Word = std::vector<Syllable>;

// Element of the graph product in canonical (reduced, lexicographic-trace) form.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(LabeledGraph g) : g_(std::move(g)) {}

  static GroupElement identity(const LabeledGraph& g) { return GroupElement(g); }
  static GroupElement generator(const LabeledGraph& g, int v, int64_t exponent = 1);

  const LabeledGraph& graph() const { return g_; }
  const Word& syllables() const { return s_; }
  int length() const { return static_cast<int>(s_.size()); }
  bool is_identity() const { return s_.empty(); }

  GroupElement inverse() const;
  GroupElement pow(int64_t k) const;
  VertexSet support() const;
  std::string to_string() const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.s_ == b.s_; }
  friend auto operator<=>(const GroupElement& a, const GroupElement& b) { return a.s_ <=> b.s_; }

 private:
  friend class WordBuilder;
  LabeledGraph g_;
  Word s_;
};

// Accumulates a reduced word syllable by syllable; finish() sorts into canonical order.
class WordBuilder {
 public:
  explicit WordBuilder(const LabeledGraph& g) : g_(g) {}

  void append(int vertex, int64_t exponent);
  void append(const Syllable& s) { append(s.vertex, s.exponent); }
  void append(const GroupElement& x);
  void append_power(const GroupElement& x, int64_t k);
  GroupElement finish();

 private:
  const LabeledGraph& g_;
  Word r_;
};

// Reduces an exponent into canonical range; returns 0 for the trivial syllable.
int64_t canonical_exponent(const Order& o, int64_t e);
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

GroupElement normal_form(const LabeledGraph& g, const Word& word);
GroupElement multiply(const GroupElement& x, const GroupElement& y);
GroupElement invert(const GroupElement& x);
GroupElement commutator(const GroupElement& x, const GroupElement& y);

struct CyclicReduction {
  GroupElement conjugator;
  GroupElement core;
};
// x = conjugator * core * conjugator^-1 with core cyclically reduced.
CyclicReduction cyclic_reduce(const GroupElement& x);
bool are_conjugate(const GroupElement& x, const GroupElement& y);

// Total exponent per vertex, reduced mod o(v) for finite orders.
std::vector<int64_t> exponent_vector(const GroupElement& x);

// Word text: whitespace separated `name^exp` tokens.
Word parse_word(const LabeledGraph& g, const std::string& text);
std::string format_word(const LabeledGraph& g, const Word& w);

}  // namespace gpab
