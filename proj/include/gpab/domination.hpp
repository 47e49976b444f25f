#pragma once

#include <optional>
#include <vector>

#include "gpab/graph.hpp"

namespace gpab {

enum class ClassKind { Free, FreeAbelian, FiniteAbelianP };

const char* to_string(ClassKind k);

struct DominationData {
  std::vector<VertexSet> leq;      // leq[u] = {v : u <= v}
  std::vector<VertexSet> leq_inf;  // leq_inf[u] = {v : u <=_inf v}, empty for finite u
  std::vector<VertexSet> classes;  // ordered by smallest member
  std::vector<int> class_of;
  std::vector<ClassKind> kinds;
  std::vector<uint32_t> class_prime;  // 0 for infinite classes
  std::vector<bool> maximal;
  std::vector<VertexSet> classes_inf;
  std::vector<int> class_inf_of;

  bool le(int u, int v) const { return leq[u].contains(v); }
  bool le_inf(int u, int v) const { return leq_inf[u].contains(v); }
  bool equivalent(int u, int v) const { return class_of[u] == class_of[v]; }
  bool is_maximal_vertex(int v) const { return maximal[class_of[v]]; }
};

bool dominates(const LabeledGraph& g, int u, int v);
bool dominates_inf(const LabeledGraph& g, int u, int v);
// Exponent k of the transvection R_u^{v^k}; requires dominates(u, v).
int64_t transvection_power(const LabeledGraph& g, int u, int v);

DominationData equivalence_classes(const LabeledGraph& g);

struct CompressedGraph {
  std::vector<VertexSet> classes;
  std::vector<ClassKind> kinds;
  std::vector<VertexSet> adjacency;  // over class indices
};
CompressedGraph compressed_graph(const LabeledGraph& g, const DominationData& d);
CompressedGraph compressed_graph(const LabeledGraph& g);

std::optional<VertexSet> leaf_like(const LabeledGraph& g, const DominationData& d, int u);
std::optional<VertexSet> leaf_like(const LabeledGraph& g, int u);

std::vector<VertexSet> bridged_components(const LabeledGraph& g, int v);

int infinity_depth(const LabeledGraph& g, const DominationData& d, int v);
int infinity_depth(const LabeledGraph& g, int v);
int infinity_depth_graph(const LabeledGraph& g);
int infinity_depth_graph(const LabeledGraph& g, const DominationData& d);

}  // namespace gpab
