#include "oracles.hpp"

#include <deque>
#include <set>

namespace gpab::testing {

namespace {

int64_t reduce(const Order& o, int64_t e) {
  if (o.is_infinite()) return e;
  const int64_t m = o.value();
  return ((e % m) + m) % m;
}

Word cleaned(const LabeledGraph& g, Word w) {
  Word out;
  for (auto s : w) {
    s.exponent = reduce(g.order(s.vertex), s.exponent);
    if (s.exponent != 0) out.push_back(s);
  }
  return out;
}

bool less_word(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].vertex != b[i].vertex) return a[i].vertex < b[i].vertex;
    if (a[i].exponent != b[i].exponent) return a[i].exponent < b[i].exponent;
  }
  return false;
}

struct WordLess {
  bool operator()(const Word& a, const Word& b) const { return less_word(a, b); }
};

}  // namespace

Word rewrite_canonical(const LabeledGraph& g, const Word& w) {
  const Word start = cleaned(g, w);
  std::set<Word, WordLess> seen{start};
  std::deque<Word> queue{start};
  Word best = start;
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    if (less_word(cur, best)) best = cur;
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      const int a = cur[i].vertex, b = cur[i + 1].vertex;
      Word next;
      if (a == b) {
        next = cur;
        next[i].exponent += next[i + 1].exponent;
        next.erase(next.begin() + static_cast<long>(i) + 1);
        next = cleaned(g, next);
      } else if (g.adjacent(a, b)) {
        next = cur;
        std::swap(next[i], next[i + 1]);
      } else {
        continue;
      }
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return best;
}

std::vector<Syllable> small_alphabet(const LabeledGraph& g) {
  std::vector<Syllable> out;
  for (int v = 0; v < g.size(); ++v) {
    const Order o = g.order(v);
    out.push_back({v, 1});
    if (o.is_infinite())
      out.push_back({v, -1});
    else if (o.value() > 2)
      out.push_back({v, o.value() - 1});
  }
  return out;
}

void for_each_word(const std::vector<Syllable>& alphabet, int max_len, const std::function<void(const Word&)>& f) {
  Word w;
  std::function<void()> rec = [&] {
    f(w);
    if (static_cast<int>(w.size()) == max_len) return;
    for (const auto& s : alphabet) {
      if (!w.empty() && w.back().vertex == s.vertex) continue;
      w.push_back(s);
      rec();
      w.pop_back();
    }
  };
  rec();
}

std::optional<Word> brute_conjugator(const GroupElement& x, const GroupElement& y, int max_len) {
  const LabeledGraph& g = x.graph();
  std::optional<Word> found;
  for_each_word(small_alphabet(g), max_len, [&](const Word& c) {
    if (found) return;
    const GroupElement ce = normal_form(g, c);
    if (ce * x * ce.inverse() == y) found = c;
  });
  return found;
}

}  // namespace gpab::testing
