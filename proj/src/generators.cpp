#include "gpab/generators.hpp"

#include "gpab/domination.hpp"

namespace gpab {

Generator make_transvection(const LabeledGraph& g, int u, int v, Side side) {
  Generator r;
  r.kind = GeneratorKind::Transvection;
  r.target = u;
  r.multiplier = v;
  r.side = side;
  r.aut = transvection(g, u, v, side);
  r.exponent = transvection_power(g, u, v);
  const std::string mult = g.name(v) + (r.exponent == 1 ? "" : "^" + std::to_string(r.exponent));
  r.name = side == Side::Right ? "transvection " + g.name(u) + "->" + g.name(u) + "*" + mult
                               : "transvection " + g.name(u) + "->" + mult + "*" + g.name(u);
  return r;
}

Generator make_commutator_transvection(const LabeledGraph& g, int u, int y, int z) {
  Generator r;
  r.kind = GeneratorKind::CommutatorTransvection;
  r.target = u;
  r.multiplier = y;
  r.second = z;
  r.aut = commutator_transvection(g, u, y, z);
  r.name = "commutator transvection " + g.name(u) + "->" + g.name(u) + "*[" + g.name(y) + "," + g.name(z) + "]";
  return r;
}

Generator make_partial_conjugation(const LabeledGraph& g, int v, const VertexSet& c) {
  Generator r;
  r.kind = GeneratorKind::PartialConjugation;
  r.multiplier = v;
  r.support = c;
  r.aut = partial_conjugation(g, v, c);
  r.name = "partial conjugation by " + g.name(v) + " on " + format_set(g, c);
  return r;
}

Generator make_commutator_partial_conjugation(const LabeledGraph& g, int v, int w, const VertexSet& c) {
  Generator r;
  r.kind = GeneratorKind::CommutatorPartialConjugation;
  r.multiplier = v;
  r.second = w;
  r.support = c;
  r.aut = conjugation_on(g, c, commutator(GroupElement::generator(g, v), GroupElement::generator(g, w)));
  r.name = "partial conjugation by [" + g.name(v) + "," + g.name(w) + "] on " + format_set(g, c);
  return r;
}

Generator make_factor(const LabeledGraph& g, int v, int64_t unit) {
  Generator r;
  r.kind = GeneratorKind::Factor;
  r.target = v;
  r.exponent = unit;
  r.aut = factor_automorphism(g, v, unit);
  r.name = "factor " + g.name(v) + "->" + g.name(v) + "^" + std::to_string(unit);
  return r;
}

Generator make_graph_symmetry(const LabeledGraph& g, const std::vector<int>& perm) {
  Generator r;
  r.kind = GeneratorKind::GraphSymmetry;
  r.perm = perm;
  r.aut = graph_automorphism(g, perm);
  r.name = "graph symmetry";
  return r;
}

Automorphism realize(const LabeledGraph& g, const std::vector<Generator>& word) {
  Automorphism out(g);
  for (const auto& x : word) out = compose(out, x.aut);
  return out;
}

std::vector<Generator> partial_conjugation_generators(const LabeledGraph& g) {
  std::vector<Generator> out;
  for (int v = 0; v < g.size(); ++v)
    for (const auto& c : components_minus_star(g, v)) out.push_back(make_partial_conjugation(g, v, c));
  return out;
}

std::vector<Generator> infinite_transvection_generators(const LabeledGraph& g) {
  std::vector<Generator> out;
  for (int u = 0; u < g.size(); ++u)
    for (int v = 0; v < g.size(); ++v)
      if (u != v && dominates_inf(g, u, v)) out.push_back(make_transvection(g, u, v));
  return out;
}

std::vector<Generator> commutator_transvection_generators(const LabeledGraph& g) {
  std::vector<Generator> out;
  for (int u = 0; u < g.size(); ++u)
    for (int y = 0; y < g.size(); ++y)
      for (int z = y + 1; z < g.size(); ++z)
        if (y != u && z != u && !g.adjacent(y, z) && dominates_inf(g, u, y) && dominates_inf(g, u, z))
          out.push_back(make_commutator_transvection(g, u, y, z));
  return out;
}

std::vector<Generator> aut_one_inf_generators(const LabeledGraph& g) {
  auto out = partial_conjugation_generators(g);
  for (auto& t : infinite_transvection_generators(g)) out.push_back(std::move(t));
  return out;
}

}  // namespace gpab
