#include "gpab/autos.hpp"

#include <numeric>
#include <set>

#include "gpab/domination.hpp"

namespace gpab {

namespace {

GroupElement gen(const LabeledGraph& g, int v, int64_t e = 1) { return GroupElement::generator(g, v, e); }

std::vector<GroupElement> generators(const LabeledGraph& g) {
  std::vector<GroupElement> out;
  out.reserve(g.size());
  for (int v = 0; v < g.size(); ++v) out.push_back(gen(g, v));
  return out;
}

GroupElement apply_images(const LabeledGraph& g, const std::vector<GroupElement>& images,
                          const GroupElement& x) {
  WordBuilder b(g);
  for (const auto& s : x.syllables()) b.append_power(images[s.vertex], s.exponent);
  return b.finish();
}

}  // namespace

Automorphism::Automorphism(const LabeledGraph& g) : g_(g), fwd_(generators(g)), bwd_(fwd_) {}

Automorphism Automorphism::from_images(const LabeledGraph& g, std::vector<GroupElement> forward,
                                       std::vector<GroupElement> backward) {
  if (static_cast<int>(forward.size()) != g.size() || static_cast<int>(backward.size()) != g.size())
    throw Error(ErrorCode::NotAnAutomorphism, "image count mismatch");
  if (!is_homomorphism(g, forward) || !is_homomorphism(g, backward))
    throw Error(ErrorCode::NotAnAutomorphism, "images violate a relator");
  Automorphism a;
  a.g_ = g;
  a.fwd_ = std::move(forward);
  a.bwd_ = std::move(backward);
  a.check_inverse_pair();
  return a;
}

void Automorphism::check_inverse_pair() const {
  for (int v = 0; v < g_.size(); ++v) {
    const GroupElement x = gen(g_, v);
    if (apply_images(g_, bwd_, fwd_[v]) != x || apply_images(g_, fwd_, bwd_[v]) != x)
      throw Error(ErrorCode::NotAnAutomorphism, "forward and backward images are not inverse");
  }
}

GroupElement Automorphism::apply(const GroupElement& x) const { return apply_images(g_, fwd_, x); }
GroupElement Automorphism::apply_inverse(const GroupElement& x) const { return apply_images(g_, bwd_, x); }

Automorphism Automorphism::inverse() const {
  Automorphism a = *this;
  std::swap(a.fwd_, a.bwd_);
  return a;
}

bool Automorphism::is_identity() const {
  for (int v = 0; v < g_.size(); ++v) {
    const auto& s = fwd_[v].syllables();
    if (s.size() != 1 || s[0].vertex != v || s[0].exponent != 1) return false;
  }
  return true;
}

std::string Automorphism::to_string() const {
  std::string out;
  for (int v = 0; v < g_.size(); ++v) {
    if (fwd_[v].length() == 1 && fwd_[v].syllables()[0] == Syllable{v, 1}) continue;
    if (!out.empty()) out += ", ";
    out += g_.name(v) + " -> " + fwd_[v].to_string();
  }
  return out.empty() ? "id" : out;
}

Automorphism compose(const Automorphism& phi, const Automorphism& psi) {
  if (!phi.g_.same_as(psi.g_) && !(phi.g_ == psi.g_))
    throw Error(ErrorCode::GraphMismatch, "compose");
  Automorphism out;
  out.g_ = phi.g_;
  const int n = phi.g_.size();
  out.fwd_.reserve(n);
  out.bwd_.reserve(n);
  for (int v = 0; v < n; ++v) out.fwd_.push_back(phi.apply(psi.fwd_[v]));
  for (int v = 0; v < n; ++v) out.bwd_.push_back(psi.apply_inverse(phi.bwd_[v]));
  out.check_inverse_pair();
  return out;
}

Automorphism power(const Automorphism& a, int64_t k) {
  Automorphism base = k < 0 ? a.inverse() : a;
  Automorphism out(a.graph());
  for (int64_t i = 0; i < (k < 0 ? -k : k); ++i) out = compose(out, base);
  return out;
}

Automorphism commutator(const Automorphism& a, const Automorphism& b) {
  return compose(compose(a, b), compose(a.inverse(), b.inverse()));
}

bool equal_in_aut(const Automorphism& a, const Automorphism& b) { return a == b; }

bool is_homomorphism(const LabeledGraph& g, const std::vector<GroupElement>& images) {
  for (auto [u, v] : g.edges())
    if (images[u] * images[v] != images[v] * images[u]) return false;
  for (int v = 0; v < g.size(); ++v)
    if (g.order(v).is_finite() && !images[v].pow(g.order(v).value()).is_identity()) return false;
  return true;
}

Automorphism transvection(const LabeledGraph& g, int u, int v, Side side) {
  if (u == v || !dominates(g, u, v))
    throw Error(ErrorCode::DominationFails, g.name(u) + " <= " + g.name(v));
  return transvection_by(g, u, gen(g, v, transvection_power(g, u, v)), side);
}

Automorphism transvection_by(const LabeledGraph& g, int u, const GroupElement& w, Side side) {
  auto fwd = generators(g);
  auto bwd = fwd;
  const GroupElement x = gen(g, u);
  if (side == Side::Right) {
    fwd[u] = x * w;
    bwd[u] = x * w.inverse();
  } else {
    fwd[u] = w * x;
    bwd[u] = w.inverse() * x;
  }
  return Automorphism::from_images(g, std::move(fwd), std::move(bwd));
}

Automorphism commutator_transvection(const LabeledGraph& g, int u, int y, int z) {
  return transvection_by(g, u, commutator(gen(g, y), gen(g, z)));
}

bool is_component_union(const LabeledGraph& g, int v, const VertexSet& c) {
  if (c.empty()) return false;
  const VertexSet outside = g.all() - star(g, v);
  if (!c.subset_of(outside)) return false;
  for (const auto& comp : components(g, outside))
    if (comp.intersects(c) && !comp.subset_of(c)) return false;
  return true;
}

Automorphism partial_conjugation(const LabeledGraph& g, int v, const VertexSet& c) {
  if (!is_component_union(g, v, c))
    throw Error(ErrorCode::NotComponentUnion, format_set(g, c) + " for " + g.name(v));
  return conjugation_on(g, c, gen(g, v));
}

Automorphism conjugation_on(const LabeledGraph& g, const VertexSet& c, const GroupElement& h) {
  auto fwd = generators(g);
  auto bwd = fwd;
  const GroupElement hi = h.inverse();
  for (int z : c) {
    fwd[z] = h * fwd[z] * hi;
    bwd[z] = hi * bwd[z] * h;
  }
  return Automorphism::from_images(g, std::move(fwd), std::move(bwd));
}

Automorphism factor_automorphism(const LabeledGraph& g, int v, int64_t unit) {
  const Order o = g.order(v);
  auto fwd = generators(g);
  auto bwd = fwd;
  if (o.is_infinite()) {
    if (unit != 1 && unit != -1) throw Error(ErrorCode::NotAUnit, std::to_string(unit));
    fwd[v] = bwd[v] = gen(g, v, unit);
  } else {
    const int64_t m = o.value();
    const int64_t r = canonical_exponent(o, unit);
    if (std::gcd(r, m) != 1) throw Error(ErrorCode::NotAUnit, std::to_string(unit));
    int64_t inv = 1;
    while ((inv * r) % m != 1) ++inv;
    fwd[v] = gen(g, v, r);
    bwd[v] = gen(g, v, inv);
  }
  return Automorphism::from_images(g, std::move(fwd), std::move(bwd));
}

Automorphism graph_automorphism(const LabeledGraph& g, const std::vector<int>& perm) {
  const int n = g.size();
  if (static_cast<int>(perm.size()) != n) throw Error(ErrorCode::NotAGraphAutomorphism, "size");
  std::vector<int> inv(n, -1);
  for (int v = 0; v < n; ++v) {
    if (perm[v] < 0 || perm[v] >= n || inv[perm[v]] >= 0)
      throw Error(ErrorCode::NotAGraphAutomorphism, "not a permutation");
    inv[perm[v]] = v;
    if (!(g.order(v) == g.order(perm[v])))
      throw Error(ErrorCode::NotAGraphAutomorphism, "orders differ");
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v]))
        throw Error(ErrorCode::NotAGraphAutomorphism, "adjacency not preserved");
  std::vector<GroupElement> fwd, bwd;
  for (int v = 0; v < n; ++v) {
    fwd.push_back(gen(g, perm[v]));
    bwd.push_back(gen(g, inv[v]));
  }
  return Automorphism::from_images(g, std::move(fwd), std::move(bwd));
}

Automorphism inner(const LabeledGraph& g, const GroupElement& h) { return conjugation_on(g, g.all(), h); }

namespace {

enum class InnerOutcome { Found, NotFound, NotCandidate };

bool verifies(const Automorphism& phi, const GroupElement& h, int& first_check) {
  const LabeledGraph& g = phi.graph();
  const int n = g.size();
  const GroupElement hi = h.inverse();
  for (int i = 0; i < n; ++i) {
    const int v = (first_check + i) % n;
    if (phi.image(v) != h * gen(g, v) * hi) {
      first_check = v;
      return false;
    }
  }
  return true;
}

bool initial_in(const LabeledGraph& g, const Word& w, size_t i) {
  for (size_t j = 0; j < i; ++j)
    if (!g.adjacent(w[j].vertex, w[i].vertex)) return false;
  return true;
}

// Least common extension of two prefixes of one reduced element, if they admit one.
std::optional<GroupElement> join(const GroupElement& p, const GroupElement& q) {
  const LabeledGraph& g = p.graph();
  Word a = p.syllables(), b = q.syllables();
  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t i = 0; i < a.size() && !progress; ++i) {
      if (!initial_in(g, a, i)) continue;
      for (size_t j = 0; j < b.size(); ++j) {
        if (b[j] == a[i] && initial_in(g, b, j)) {
          a.erase(a.begin() + i);
          b.erase(b.begin() + j);
          progress = true;
          break;
        }
      }
    }
  }
  for (const auto& x : a)
    for (const auto& y : b)
      if (!g.adjacent(x.vertex, y.vertex)) return std::nullopt;
  return p * normal_form(g, b);
}

InnerOutcome try_inner(const Automorphism& phi, int bound, GroupElement& witness) {
  const LabeledGraph& g = phi.graph();
  const int n = g.size();
  if (n == 0) {
    witness = GroupElement::identity(g);
    return InnerOutcome::Found;
  }
  std::vector<GroupElement> peel(n);
  for (int v = 0; v < n; ++v) {
    auto cr = cyclic_reduce(phi.image(v));
    if (cr.core.length() != 1 || cr.core.syllables()[0] != Syllable{v, 1}) return InnerOutcome::NotCandidate;
    peel[v] = cr.conjugator;
  }
  const int v0 = 0;
  const GroupElement& h0 = peel[v0];
  const VertexSet st0 = star(g, v0);
  const VertexSet central = center_vertices(g);
  int first_check = 0;

  std::optional<GroupElement> joined = h0;
  for (int w = 0; w < n && joined; ++w) joined = join(*joined, peel[w]);
  if (joined) {
    const GroupElement c = h0.inverse() * *joined;
    if (c.length() <= bound && c.support().subset_of(st0) && verifies(phi, *joined, first_check)) {
      witness = *joined;
      return InnerOutcome::Found;
    }
  }

  // Bounded search h = h0·c with c in ⟨st(v0)⟩ of at most `bound` syllables.
  std::set<Syllable> alphabet;
  for (int z : st0 - central) {
    alphabet.insert({z, 1});
    alphabet.insert({z, -1});
  }
  for (const auto& h : peel)
    for (const auto& s : h.syllables())
      if (st0.contains(s.vertex) && !central.contains(s.vertex)) {
        alphabet.insert(s);
        alphabet.insert({s.vertex, -s.exponent});
      }
  std::set<Word> seen{Word{}};
  std::vector<GroupElement> level{GroupElement::identity(g)};
  if (verifies(phi, h0, first_check)) {
    witness = h0;
    return InnerOutcome::Found;
  }
  for (int depth = 1; depth <= bound; ++depth) {
    std::vector<GroupElement> next;
    for (const auto& c : level) {
      for (const auto& s : alphabet) {
        WordBuilder b(g);
        b.append(c);
        b.append(s);
        GroupElement c2 = b.finish();
        if (!seen.insert(c2.syllables()).second) continue;
        const GroupElement h = h0 * c2;
        if (verifies(phi, h, first_check)) {
          witness = h;
          return InnerOutcome::Found;
        }
        next.push_back(std::move(c2));
      }
    }
    level = std::move(next);
  }
  return InnerOutcome::NotFound;
}

}  // namespace

InnerSearch is_inner_bounded(const Automorphism& phi, int bound) {
  InnerSearch r;
  r.bound = bound;
  switch (try_inner(phi, bound, r.witness)) {
    case InnerOutcome::Found: r.found = true; break;
    case InnerOutcome::NotFound: break;
    case InnerOutcome::NotCandidate:
      throw Error(ErrorCode::NotAnInnerCandidate, "some vertex image is not a conjugate of the vertex");
  }
  return r;
}

InnerSearch equal_in_out_bounded(const Automorphism& phi, const Automorphism& psi, int bound) {
  InnerSearch r;
  r.bound = bound;
  if (phi == psi) {
    r.found = true;
    r.witness = GroupElement::identity(phi.graph());
    return r;
  }
  r.found = try_inner(compose(phi, psi.inverse()), bound, r.witness) == InnerOutcome::Found;
  return r;
}

bool commute_in_out_bounded(const Automorphism& a, const Automorphism& b, int bound) {
  return equal_in_out_bounded(compose(a, b), compose(b, a), bound).found;
}

GroupElement to_special(const GroupElement& x, const InducedSubgraph& sub) {
  WordBuilder b(sub.graph);
  for (const auto& s : x.syllables()) {
    const int v = sub.new_index[s.vertex];
    if (v >= 0) b.append(v, s.exponent);
  }
  return b.finish();
}

namespace {

std::optional<SpecialAutomorphism> restrict_with(const Automorphism& phi, const VertexSet& lambda,
                                                 const InducedSubgraph& sub, const GroupElement& h) {
  const LabeledGraph& g = phi.graph();
  const GroupElement hi = h.inverse();
  std::vector<GroupElement> fwd, bwd;
  for (int v : lambda) {
    GroupElement f = hi * phi.image(v) * h;
    GroupElement b = phi.apply_inverse(h * gen(g, v) * hi);
    if (!f.support().subset_of(lambda) || !b.support().subset_of(lambda)) return std::nullopt;
    fwd.push_back(to_special(f, sub));
    bwd.push_back(to_special(b, sub));
  }
  try {
    return SpecialAutomorphism{sub, Automorphism::from_images(sub.graph, std::move(fwd), std::move(bwd))};
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

SpecialAutomorphism restrict_to_special(const Automorphism& phi, const VertexSet& lambda, int bound) {
  const LabeledGraph& g = phi.graph();
  const InducedSubgraph sub = induced_subgraph(g, lambda);
  std::vector<GroupElement> candidates{GroupElement::identity(g)};
  std::optional<GroupElement> joined = GroupElement::identity(g);
  for (int v : lambda) {
    const GroupElement c = cyclic_reduce(phi.image(v)).conjugator;
    candidates.push_back(c);
    if (joined) joined = join(*joined, c);
  }
  if (joined) candidates.push_back(*joined);
  for (const auto& h : candidates)
    if (auto r = restrict_with(phi, lambda, sub, h)) return *r;

  std::set<Word> seen{Word{}};
  std::vector<GroupElement> level{GroupElement::identity(g)};
  for (int depth = 1; depth <= bound; ++depth) {
    std::vector<GroupElement> next;
    for (const auto& c : level)
      for (int z = 0; z < g.size(); ++z)
        for (int e : {1, -1}) {
          GroupElement h = c * gen(g, z, e);
          if (!seen.insert(h.syllables()).second) continue;
          if (auto r = restrict_with(phi, lambda, sub, h)) return *r;
          next.push_back(std::move(h));
        }
    level = std::move(next);
  }
  throw Error(ErrorCode::NotRestrictable, "no representative found up to bound " + std::to_string(bound));
}

SpecialAutomorphism factor_to_special(const Automorphism& phi, const VertexSet& lambda) {
  const InducedSubgraph sub = induced_subgraph(phi.graph(), lambda);
  std::vector<GroupElement> fwd, bwd;
  for (int v : lambda) {
    fwd.push_back(to_special(phi.image(v), sub));
    bwd.push_back(to_special(phi.inverse_image(v), sub));
  }
  try {
    return SpecialAutomorphism{sub, Automorphism::from_images(sub.graph, std::move(fwd), std::move(bwd))};
  } catch (const Error& e) {
    throw Error(ErrorCode::KernelNotPreserved, e.what());
  }
}

}  // namespace gpab
