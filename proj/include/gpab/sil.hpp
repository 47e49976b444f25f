#pragma once

#include <vector>

#include "gpab/graph.hpp"

namespace gpab {

enum class SilKind { SIL, NonCoxeterSIL, STIL, FSIL };

const char* to_string(SilKind k);

struct SilWitness {
  SilKind kind;
  std::vector<int> vertices;
  VertexSet component;
};

// Components of Γ∖(lk x ∩ lk y) avoiding x and y; empty when x, y are adjacent.
std::vector<VertexSet> sil_components(const LabeledGraph& g, int x, int y);
bool is_sil(const LabeledGraph& g, int x, int y, int w);
bool is_virtually_abelian_triple(const LabeledGraph& g, int x, int y, int z);
std::vector<VertexSet> stil_components(const LabeledGraph& g, int x, int y, int z);
bool is_fsil(const LabeledGraph& g, int x, int y, int z);

// Every SIL (reported as NonCoxeterSIL when applicable), STIL and FSIL, in deterministic order.
std::vector<SilWitness> find_sils(const LabeledGraph& g);

bool has_non_coxeter_sil(const LabeledGraph& g);
bool has_stil(const LabeledGraph& g);
bool has_fsil(const LabeledGraph& g);
// No non-Coxeter SIL, no STIL, no FSIL.
bool has_no_free_sil(const LabeledGraph& g);

// Whether π^x_C and π^y_D commute in Out, decided graphically.
bool pc_commute(const LabeledGraph& g, int x, const VertexSet& c, int y, const VertexSet& d);

}  // namespace gpab
