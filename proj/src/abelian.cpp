#include "gpab/abelian.hpp"

#include <algorithm>
#include <stdexcept>

#include "gpab/sil.hpp"

namespace gpab {

int64_t AbelianizedGroup::modulus(int coord) const {
  return coord < free_rank() ? 0 : moduli[coord - free_rank()];
}

int AbelianizedGroup::vertex_at(int coord) const {
  return coord < free_rank() ? infinite_vertices[coord] : torsion_vertices[coord - free_rank()];
}

AbelianizedGroup abelianized_group(const LabeledGraph& g, const DominationData& d) {
  AbelianizedGroup a;
  a.graph = g;
  // Classes of infinite vertices, ordered with dominated classes first.
  std::vector<int> classes;
  for (size_t c = 0; c < d.classes_inf.size(); ++c)
    if (g.order(d.classes_inf[c].first()).is_infinite()) classes.push_back(static_cast<int>(c));
  std::vector<int> placed;
  std::vector<char> done(d.classes_inf.size(), 0);
  while (placed.size() < classes.size()) {
    for (int c : classes) {
      if (done[c]) continue;
      const int rep = d.classes_inf[c].first();
      bool ready = true;
      for (int other : classes) {
        if (other == c || done[other]) continue;
        if (d.le_inf(d.classes_inf[other].first(), rep)) {
          ready = false;
          break;
        }
      }
      if (ready) {
        done[c] = 1;
        placed.push_back(c);
        break;
      }
    }
  }
  for (int c : placed) {
    a.free_blocks.push_back(d.classes_inf[c]);
    for (int v : d.classes_inf[c]) a.infinite_vertices.push_back(v);
  }
  for (int v = 0; v < g.size(); ++v)
    if (g.order(v).is_finite()) {
      a.torsion_vertices.push_back(v);
      a.moduli.push_back(g.order(v).value());
    }
  a.coordinate_of.assign(g.size(), -1);
  for (int i = 0; i < a.dimension(); ++i) a.coordinate_of[a.vertex_at(i)] = i;
  return a;
}

AbelianizedGroup abelianized_group(const LabeledGraph& g) { return abelianized_group(g, equivalence_classes(g)); }

bool AbelianAuto::is_identity() const {
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows.size(); ++j)
      if (rows[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

namespace {

int64_t reduce(int64_t x, int64_t m) {
  if (m == 0) return x;
  x %= m;
  return x < 0 ? x + m : x;
}

int free_count(const std::vector<int64_t>& moduli) {
  return static_cast<int>(std::count(moduli.begin(), moduli.end(), 0));
}

IntMatrix block(const IntMatrix& m, int from, int to) {
  IntMatrix out;
  for (int i = from; i < to; ++i) out.emplace_back(m[i].begin() + from, m[i].begin() + to);
  return out;
}

}  // namespace

IntMatrix AbelianAuto::free_block() const { return block(rows, 0, free_count(column_moduli)); }

IntMatrix AbelianAuto::torsion_block() const {
  return block(rows, free_count(column_moduli), static_cast<int>(rows.size()));
}

AbelianAuto abelian_action(const AbelianizedGroup& a, const Automorphism& phi) {
  AbelianAuto r;
  const int n = a.dimension();
  r.column_moduli.resize(n);
  for (int j = 0; j < n; ++j) r.column_moduli[j] = a.modulus(j);
  r.rows.assign(n, std::vector<int64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    const auto ev = exponent_vector(phi.image(a.vertex_at(i)));
    for (int v = 0; v < static_cast<int>(ev.size()); ++v) r.rows[i][a.coordinate_of[v]] = ev[v];
  }
  return r;
}

AbelianAuto abelian_action(const Automorphism& phi) {
  return abelian_action(abelianized_group(phi.graph()), phi);
}

AbelianAuto compose(const AbelianAuto& outer, const AbelianAuto& inner) {
  const size_t n = inner.rows.size();
  AbelianAuto r;
  r.column_moduli = inner.column_moduli;
  r.rows.assign(n, std::vector<int64_t>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      const int64_t c = inner.rows[i][k];
      if (c == 0) continue;
      for (size_t j = 0; j < n; ++j)
        r.rows[i][j] = reduce(checked_add(r.rows[i][j], checked_mul(c, outer.rows[k][j])), r.column_moduli[j]);
    }
  return r;
}

bool is_torelli(const Automorphism& phi) { return abelian_action(phi).is_identity(); }

std::vector<Generator> torelli_generators(const LabeledGraph& g) {
  auto out = partial_conjugation_generators(g);
  for (auto& t : commutator_transvection_generators(g)) out.push_back(std::move(t));
  return out;
}

int64_t determinant(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
  int sign = 1;
  __int128 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return static_cast<int64_t>(sign * a[n - 1][n - 1]);
}

bool OrientationData::trivial() const {
  for (size_t i = 0; i < torsion_block.size(); ++i)
    for (size_t j = 0; j < torsion_block.size(); ++j)
      if (torsion_block[i][j] != (i == j ? 1 : 0)) return false;
  return std::all_of(signs.begin(), signs.end(), [](const auto& s) { return s.second == 1; });
}

OrientationData orientation_character(const LabeledGraph& g, const std::vector<Generator>& word) {
  for (const auto& x : word)
    if (x.kind == GeneratorKind::GraphSymmetry)
      throw Error(ErrorCode::NotInAutZero, x.name);
  const Automorphism phi = realize(g, word);
  const DominationData d = equivalence_classes(g);
  const AbelianizedGroup a = abelianized_group(g, d);
  OrientationData out;
  out.torsion_block = abelian_action(a, phi).torsion_block();
  out.moduli = a.moduli;
  for (size_t c = 0; c < d.classes.size(); ++c) {
    const VertexSet& cls = d.classes[c];
    if (g.order(cls.first()).is_finite()) continue;
    VertexSet below;
    for (int w = 0; w < g.size(); ++w)
      if (d.le(w, cls.first())) below.insert(w);
    const SpecialAutomorphism fact = factor_to_special(phi, below);
    IntMatrix m;
    for (int x : cls) {
      const auto ev = exponent_vector(fact.aut.image(fact.sub.new_index[x]));
      std::vector<int64_t> row;
      for (int y : cls) row.push_back(ev[fact.sub.new_index[y]]);
      m.push_back(std::move(row));
    }
    const int64_t det = determinant(m);
    if (det != 1 && det != -1) throw std::logic_error("class action is not invertible");
    out.signs.emplace_back(cls, static_cast<int>(det));
  }
  return out;
}

std::vector<IntMatrix> special_linear_blocks(const LabeledGraph& g, const std::vector<Generator>& word) {
  for (const auto& x : word) {
    const bool bad = x.kind == GeneratorKind::GraphSymmetry ||
                     (x.kind == GeneratorKind::Factor && !x.aut.is_identity()) ||
                     (x.kind == GeneratorKind::Transvection && g.order(x.target).is_finite());
    if (bad) throw Error(ErrorCode::NotInOutOneInf, x.name);
  }
  const AbelianizedGroup a = abelianized_group(g);
  const AbelianAuto act = abelian_action(a, realize(g, word));
  std::vector<IntMatrix> out;
  int offset = 0;
  for (const auto& cls : a.free_blocks) {
    const int size = cls.size();
    if (size >= 2) {
      IntMatrix m;
      for (int i = offset; i < offset + size; ++i)
        m.emplace_back(act.rows[i].begin() + offset, act.rows[i].begin() + offset + size);
      if (determinant(m) != 1) throw std::logic_error("special linear block with determinant != 1");
      out.push_back(std::move(m));
    }
    offset += size;
  }
  return out;
}

std::vector<int> special_linear_block_sizes(const LabeledGraph& g) {
  std::vector<int> out;
  for (const auto& cls : abelianized_group(g).free_blocks)
    if (cls.size() >= 2) out.push_back(cls.size());
  return out;
}

std::vector<Generator> sl_kernel_generators(const LabeledGraph& g) {
  const DominationData d = equivalence_classes(g);
  auto out = torelli_generators(g);
  for (auto& t : infinite_transvection_generators(g))
    if (!d.equivalent(t.target, t.multiplier)) out.push_back(std::move(t));
  return out;
}

std::vector<FamilyGenerator> finite_index_generators(const LabeledGraph& g) {
  const DominationData d = equivalence_classes(g);
  const int n = g.size();
  std::vector<FamilyGenerator> out;
  for (auto& p : partial_conjugation_generators(g))
    if (!g.order(p.multiplier).is_two()) out.push_back({FiniteIndexFamily::PartialConjugation, std::move(p)});
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) {
      if (!g.order(v).is_two() || !g.order(w).is_two() || g.adjacent(v, w)) continue;
      const auto cw = components_minus_star(g, w);
      for (const auto& c : components_minus_star(g, v))
        if (std::find(cw.begin(), cw.end(), c) != cw.end())
          out.push_back({FiniteIndexFamily::CommutatorPartialConjugation,
                         make_commutator_partial_conjugation(g, v, w, c)});
    }
  for (auto& t : infinite_transvection_generators(g))
    if (!d.equivalent(t.target, t.multiplier) && !g.order(t.multiplier).is_two())
      out.push_back({FiniteIndexFamily::Transvection, std::move(t)});
  for (auto& t : commutator_transvection_generators(g))
    if (g.order(t.multiplier).is_two() && g.order(t.second).is_two())
      out.push_back({FiniteIndexFamily::CommutatorTransvection, std::move(t)});
  return out;
}

std::vector<std::vector<Generator>> depth_filtration(const LabeledGraph& g) {
  const DominationData d = equivalence_classes(g);
  std::vector<int> depth(g.size());
  for (int v = 0; v < g.size(); ++v) depth[v] = infinity_depth(g, d, v);
  const auto gens = finite_index_generators(g);
  std::vector<std::vector<Generator>> out;
  for (int i = 1;; ++i) {
    std::vector<Generator> s;
    for (const auto& fg : gens) {
      const Generator& x = fg.gen;
      switch (fg.family) {
        case FiniteIndexFamily::PartialConjugation:
          if (depth[x.multiplier] >= i) s.push_back(x);
          break;
        case FiniteIndexFamily::Transvection:
          if (depth[x.multiplier] - depth[x.target] >= i) s.push_back(x);
          break;
        default:
          if (i == 1) s.push_back(x);
      }
    }
    if (s.empty()) break;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace gpab
