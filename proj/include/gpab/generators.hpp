#pragma once

#include <string>
#include <vector>

#include "gpab/autos.hpp"

namespace gpab {

enum class GeneratorKind {
  Transvection,
  CommutatorTransvection,
  PartialConjugation,
  CommutatorPartialConjugation,
  Factor,
  GraphSymmetry,
};

// A named standard generator together with its realized automorphism.
struct Generator {
  GeneratorKind kind = GeneratorKind::Transvection;
  int target = -1;      // transvected or factor vertex
  int multiplier = -1;  // transvecting or conjugating vertex
  int second = -1;      // second commutator vertex
  VertexSet support;    // conjugated vertices
  int64_t exponent = 1;
  Side side = Side::Right;
  std::vector<int> perm;
  Automorphism aut;
  std::string name;
};

Generator make_transvection(const LabeledGraph& g, int u, int v, Side side = Side::Right);
Generator make_commutator_transvection(const LabeledGraph& g, int u, int y, int z);
Generator make_partial_conjugation(const LabeledGraph& g, int v, const VertexSet& c);
Generator make_commutator_partial_conjugation(const LabeledGraph& g, int v, int w, const VertexSet& c);
Generator make_factor(const LabeledGraph& g, int v, int64_t unit);
Generator make_graph_symmetry(const LabeledGraph& g, const std::vector<int>& perm);

// Composite g1 ∘ g2 ∘ ... of a generator word.
Automorphism realize(const LabeledGraph& g, const std::vector<Generator>& word);

// Single-component partial conjugations π^v_C, ordered by (v, C).
std::vector<Generator> partial_conjugation_generators(const LabeledGraph& g);
// Transvections u ↦ u·v with u ≤_∞ v, u ≠ v.
std::vector<Generator> infinite_transvection_generators(const LabeledGraph& g);
// Commutator transvections u ↦ u·[y,z] with u ≤_∞ y, z and [y,z] ≠ 1.
std::vector<Generator> commutator_transvection_generators(const LabeledGraph& g);
// Generators of the subgroup acting trivially on determinants and torsion.
std::vector<Generator> aut_one_inf_generators(const LabeledGraph& g);

}  // namespace gpab
