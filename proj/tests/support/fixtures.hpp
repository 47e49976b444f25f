#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gpab/graph.hpp"
#include "gpab/words.hpp"

namespace gpab::testing {

// The seven small reference graphs used across the suites, keyed "F1".."F7".
LabeledGraph fixture(const std::string& name);
std::vector<std::pair<std::string, LabeledGraph>> all_fixtures();

// Builds a graph from "name:order" tokens and "a-b" edges, e.g. graph({"a:2","b:inf"}, {"a-b"}).
LabeledGraph graph(const std::vector<std::string>& vertices, const std::vector<std::string>& edges);

// Vertex set by names.
VertexSet vs(const LabeledGraph& g, const std::vector<std::string>& names);
// Normal form of a word in the CLI syntax, e.g. "a b^-1".
GroupElement elem(const LabeledGraph& g, const std::string& text);

// Small graphs that instantiate the catalog families rarely met by random graphs:
// commutator partial conjugations need two non-adjacent involutions sharing a component.
std::vector<LabeledGraph> catalog_coverage_graphs();

// Order labels used by the seeded random suites.
std::vector<Order> mixed_orders();

}  // namespace gpab::testing
