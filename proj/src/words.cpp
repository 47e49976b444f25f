#include "gpab/words.hpp"

#include <charconv>
#include <deque>
#include <set>
#include <sstream>

namespace gpab {

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "exponent overflow");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "exponent overflow");
  return r;
}

int64_t canonical_exponent(const Order& o, int64_t e) {
  if (o.is_infinite()) return e;
  const int64_t m = o.value();
  e %= m;
  if (e < 0) e += m;
  return e;
}

namespace {

Word canonical_order(const LabeledGraph& g, const Word& w) {
  const int n = static_cast<int>(w.size());
  Word out;
  out.reserve(n);
  std::vector<char> taken(n, 0);
  for (int step = 0; step < n; ++step) {
    VertexSet seen;
    int best = -1;
    for (int i = 0; i < n; ++i) {
      if (taken[i]) continue;
      const int v = w[i].vertex;
      if (seen.subset_of(g.neighbors(v)) && (best < 0 || v < w[best].vertex)) best = i;
      seen.insert(v);
    }
    taken[best] = 1;
    out.push_back(w[best]);
  }
  return out;
}

}  // namespace

GroupElement GroupElement::generator(const LabeledGraph& g, int v, int64_t exponent) {
  if (v < 0 || v >= g.size()) throw Error(ErrorCode::UnknownVertex, std::to_string(v));
  WordBuilder b(g);
  b.append(v, exponent);
  return b.finish();
}

void WordBuilder::append(int vertex, int64_t exponent) {
  if (vertex < 0 || vertex >= g_.size()) throw Error(ErrorCode::UnknownVertex, std::to_string(vertex));
  const Order o = g_.order(vertex);
  exponent = canonical_exponent(o, exponent);
  if (exponent == 0) return;
  const VertexSet& nb = g_.neighbors(vertex);
  for (int j = static_cast<int>(r_.size()) - 1; j >= 0; --j) {
    if (r_[j].vertex == vertex) {
      int64_t merged = canonical_exponent(o, checked_add(r_[j].exponent, exponent));
      if (merged == 0)
        r_.erase(r_.begin() + j);
      else
        r_[j].exponent = merged;
      return;
    }
    if (!nb.contains(r_[j].vertex)) break;
  }
  r_.push_back({vertex, exponent});
}

void WordBuilder::append(const GroupElement& x) {
  for (const auto& s : x.s_) append(s);
}

void WordBuilder::append_power(const GroupElement& x, int64_t k) {
  if (k == 0 || x.is_identity()) return;
  if (x.length() == 1) {
    append(x.s_[0].vertex, checked_mul(x.s_[0].exponent, k));
    return;
  }
  if (k > 0) {
    for (int64_t i = 0; i < k; ++i) append(x);
  } else {
    const GroupElement inv = x.inverse();
    for (int64_t i = 0; i < -k; ++i) append(inv);
  }
}

GroupElement WordBuilder::finish() {
  GroupElement out(g_);
  out.s_ = canonical_order(g_, r_);
  return out;
}

GroupElement GroupElement::inverse() const {
  WordBuilder b(g_);
  for (auto it = s_.rbegin(); it != s_.rend(); ++it) b.append(it->vertex, -it->exponent);
  return b.finish();
}

GroupElement GroupElement::pow(int64_t k) const {
  WordBuilder b(g_);
  b.append_power(*this, k);
  return b.finish();
}

VertexSet GroupElement::support() const {
  VertexSet s;
  for (const auto& x : s_) s.insert(x.vertex);
  return s;
}

std::string GroupElement::to_string() const { return format_word(g_, s_); }

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.is_identity()) return b;
  if (b.is_identity()) return a;
  WordBuilder w(a.g_);
  w.append(a);
  w.append(b);
  return w.finish();
}

GroupElement normal_form(const LabeledGraph& g, const Word& word) {
  WordBuilder b(g);
  for (const auto& s : word) b.append(s);
  return b.finish();
}

GroupElement multiply(const GroupElement& x, const GroupElement& y) { return x * y; }
GroupElement invert(const GroupElement& x) { return x.inverse(); }

GroupElement commutator(const GroupElement& x, const GroupElement& y) {
  WordBuilder b(x.graph());
  b.append(x);
  b.append(y);
  b.append(x.inverse());
  b.append(y.inverse());
  return b.finish();
}

namespace {

// Indices i, j (i != j) of an initial and a terminal syllable with the same vertex.
bool find_peel(const LabeledGraph& g, const Word& w, int& out_i) {
  const int n = static_cast<int>(w.size());
  std::vector<char> initial(n, 0), terminal(n, 0);
  VertexSet seen;
  for (int i = 0; i < n; ++i) {
    initial[i] = seen.subset_of(g.neighbors(w[i].vertex));
    seen.insert(w[i].vertex);
  }
  seen = VertexSet();
  for (int i = n - 1; i >= 0; --i) {
    terminal[i] = seen.subset_of(g.neighbors(w[i].vertex));
    seen.insert(w[i].vertex);
  }
  for (int i = 0; i < n; ++i) {
    if (!initial[i]) continue;
    for (int j = i + 1; j < n; ++j) {
      if (terminal[j] && w[j].vertex == w[i].vertex) {
        out_i = i;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

CyclicReduction cyclic_reduce(const GroupElement& x) {
  const LabeledGraph& g = x.graph();
  GroupElement conj = GroupElement::identity(g);
  GroupElement core = x;
  int i = 0;
  while (find_peel(g, core.syllables(), i)) {
    const Syllable s = core.syllables()[i];
    GroupElement sg = GroupElement::generator(g, s.vertex, s.exponent);
    WordBuilder b(g);
    b.append(s.vertex, -s.exponent);
    b.append(core);
    b.append(s);
    core = b.finish();
    conj = conj * sg;
  }
  return {conj, core};
}

bool are_conjugate(const GroupElement& x, const GroupElement& y) {
  const LabeledGraph& g = x.graph();
  const GroupElement cx = cyclic_reduce(x).core;
  const GroupElement cy = cyclic_reduce(y).core;
  if (cx == cy) return true;
  if (cx.length() != cy.length()) return false;
  if (exponent_vector(cx) != exponent_vector(cy)) return false;
  std::set<Word> visited{cx.syllables()};
  std::deque<GroupElement> queue{cx};
  while (!queue.empty()) {
    const GroupElement cur = queue.front();
    queue.pop_front();
    const Word& w = cur.syllables();
    VertexSet seen;
    for (size_t i = 0; i < w.size(); ++i) {
      if (seen.subset_of(g.neighbors(w[i].vertex))) {
        WordBuilder b(g);
        b.append(w[i].vertex, -w[i].exponent);
        b.append(cur);
        b.append(w[i]);
        GroupElement next = cyclic_reduce(b.finish()).core;
        if (next == cy) return true;
        if (visited.insert(next.syllables()).second) queue.push_back(std::move(next));
      }
      seen.insert(w[i].vertex);
    }
  }
  return false;
}

std::vector<int64_t> exponent_vector(const GroupElement& x) {
  const LabeledGraph& g = x.graph();
  std::vector<int64_t> out(g.size(), 0);
  for (const auto& s : x.syllables())
    out[s.vertex] = canonical_exponent(g.order(s.vertex), checked_add(out[s.vertex], s.exponent));
  return out;
}

Word parse_word(const LabeledGraph& g, const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  Word out;
  while (in >> tok) {
    auto caret = tok.find('^');
    std::string name = tok.substr(0, caret);
    int64_t e = 1;
    if (caret != std::string::npos) {
      std::string es = tok.substr(caret + 1);
      const char* b = es.data();
      if (!es.empty() && es[0] == '+') ++b;
      auto [ptr, ec] = std::from_chars(b, es.data() + es.size(), e);
      if (es.empty() || ec != std::errc() || ptr != es.data() + es.size())
        throw Error(ErrorCode::MalformedWord, "bad exponent in '" + tok + "'");
    }
    out.push_back({g.index(name), e});
  }
  return out;
}

std::string format_word(const LabeledGraph& g, const Word& w) {
  if (w.empty()) return "(identity)";
  std::string out;
  for (const auto& s : w) {
    if (!out.empty()) out += ' ';
    out += g.name(s.vertex);
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

}  // namespace gpab
