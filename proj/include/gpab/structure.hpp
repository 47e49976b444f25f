#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpab/abelian.hpp"
#include "gpab/domination.hpp"
#include "gpab/generators.hpp"

namespace gpab {

enum class FreeReason { ClassSize2, NonCoxeterSIL, STIL, FSIL };

const char* to_string(FreeReason r);

struct Witness {
  std::string name;
  Automorphism aut;
};

struct Classification {
  bool free_subgroup = false;
  FreeReason reason = FreeReason::ClassSize2;
  std::vector<FreeReason> all_reasons;
  std::vector<Witness> witnesses;
  int depth = 1;
  // Largest i with a nonempty depth-filtration term; differs from depth on some graphs.
  int filtration_bound = 0;
  std::vector<int> sl_blocks;
  std::string ses_note;
};

Classification classify(const LabeledGraph& g);

struct ExtendedGraph {
  struct ClassVertex {
    int index;
    VertexSet cls;
    VertexSet subset;
  };
  LabeledGraph base;
  LabeledGraph graph;
  int cone1 = -1;
  int cone2 = -1;
  std::vector<ClassVertex> class_vertices;
};

constexpr int kDefaultExtendedCap = 256;

int extended_graph_size(const LabeledGraph& g);
ExtendedGraph extended_graph(const LabeledGraph& g, int cap = kDefaultExtendedCap);

// Leaf-like transvections and partial conjugations on bridged components.
std::vector<Generator> projection_kernel_generators(const LabeledGraph& g);

struct StarDecomposition {
  VertexSet gamma_prime;
  VertexSet center;
  std::vector<Generator> transvections;
};
std::optional<StarDecomposition> star_decomposition(const LabeledGraph& g);

// Label-preserving automorphisms of the compressed graph, as permutations of class indices.
std::vector<std::vector<int>> compressed_symmetries(const LabeledGraph& g);

// Nested-commutator identity certifying the depth lower bound on a longest chain.
struct DepthWitness {
  std::vector<int> chain;  // bottom first
  bool uses_components = false;
  VertexSet component;
  bool holds = false;
  bool exact = false;  // equality in Aut, otherwise in bounded Out
  bool nontrivial = false;
};
std::optional<DepthWitness> depth_witness(const LabeledGraph& g, int bound = 4);

}  // namespace gpab
