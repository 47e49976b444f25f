#pragma once

#include <utility>
#include <vector>

#include "gpab/domination.hpp"
#include "gpab/generators.hpp"

namespace gpab {

using IntMatrix = std::vector<std::vector<int64_t>>;

// Coordinates of the abelianization: free coordinates first, grouped by ≤_∞-class
// in a topological order (dominated classes first), then torsion coordinates by rank.
struct AbelianizedGroup {
  LabeledGraph graph;
  std::vector<int> infinite_vertices;
  std::vector<int> torsion_vertices;
  std::vector<int64_t> moduli;       // per torsion coordinate
  std::vector<int> coordinate_of;    // vertex -> coordinate
  std::vector<VertexSet> free_blocks;  // ≤_∞-classes of infinite vertices, in coordinate order

  int free_rank() const { return static_cast<int>(infinite_vertices.size()); }
  int dimension() const { return static_cast<int>(coordinate_of.size()); }
  int64_t modulus(int coord) const;  // 0 for free coordinates
  int vertex_at(int coord) const;
};

AbelianizedGroup abelianized_group(const LabeledGraph& g);
AbelianizedGroup abelianized_group(const LabeledGraph& g, const DominationData& d);

// Row i holds the coordinates of the image of coordinate vertex i.
struct AbelianAuto {
  IntMatrix rows;
  std::vector<int64_t> column_moduli;

  bool is_identity() const;
  IntMatrix free_block() const;
  IntMatrix torsion_block() const;
  friend bool operator==(const AbelianAuto&, const AbelianAuto&) = default;
};

AbelianAuto abelian_action(const AbelianizedGroup& a, const Automorphism& phi);
AbelianAuto abelian_action(const Automorphism& phi);
// Action of outer ∘ inner.
AbelianAuto compose(const AbelianAuto& outer, const AbelianAuto& inner);

bool is_torelli(const Automorphism& phi);
std::vector<Generator> torelli_generators(const LabeledGraph& g);

int64_t determinant(const IntMatrix& m);

// Torsion action plus the determinant sign per infinite ≤-class.
struct OrientationData {
  IntMatrix torsion_block;
  std::vector<int64_t> moduli;
  std::vector<std::pair<VertexSet, int>> signs;

  bool trivial() const;
};
OrientationData orientation_character(const LabeledGraph& g, const std::vector<Generator>& word);

// Diagonal free blocks for the ≤_∞-classes of size at least two.
std::vector<IntMatrix> special_linear_blocks(const LabeledGraph& g, const std::vector<Generator>& word);
std::vector<int> special_linear_block_sizes(const LabeledGraph& g);

std::vector<Generator> sl_kernel_generators(const LabeledGraph& g);

enum class FiniteIndexFamily { PartialConjugation, CommutatorPartialConjugation, Transvection, CommutatorTransvection };

struct FamilyGenerator {
  FiniteIndexFamily family;
  Generator gen;
};
// Generators of the finite-index subgroup used in the no-free-SIL regime.
std::vector<FamilyGenerator> finite_index_generators(const LabeledGraph& g);
// Nested generator sets S_1 ⊇ S_2 ⊇ ... graded by ∞-depth, up to the last nonempty one.
std::vector<std::vector<Generator>> depth_filtration(const LabeledGraph& g);

}  // namespace gpab
