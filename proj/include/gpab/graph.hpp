#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gpab/error.hpp"
#include "gpab/vertex_set.hpp"

namespace gpab {

// Order of a vertex generator: infinite, or p^e for a prime p.
struct Order {
  uint32_t p = 0;
  uint32_t e = 0;

  static Order infinite() { return {}; }
  static Order prime_power(uint32_t p, uint32_t e);
  // Parses "inf" or a decimal prime power.
  static Order parse(const std::string& text);

  bool is_infinite() const { return p == 0; }
  bool is_finite() const { return p != 0; }
  // Only meaningful for finite orders.
  int64_t value() const;
  bool is_two() const { return p == 2 && e == 1; }
  std::string to_string() const;

  friend bool operator==(const Order&, const Order&) = default;
};

bool is_prime(uint64_t n);

// Immutable labeled simplicial graph. Copies share the underlying data.
class LabeledGraph {
 public:
  LabeledGraph();
  LabeledGraph(std::vector<std::string> names, std::vector<Order> orders,
               const std::vector<std::pair<int, int>>& edges);

  int size() const { return static_cast<int>(d_->names.size()); }
  const std::string& name(int v) const { return d_->names[v]; }
  const std::vector<std::string>& names() const { return d_->names; }
  Order order(int v) const { return d_->orders[v]; }
  const std::vector<Order>& orders() const { return d_->orders; }
  bool adjacent(int u, int v) const { return d_->adj[u].contains(v); }
  const VertexSet& neighbors(int v) const { return d_->adj[v]; }
  VertexSet all() const { return VertexSet::range(size()); }
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  // Index of a vertex by name; throws UnknownVertex.
  int index(const std::string& name) const;
  std::optional<int> find(const std::string& name) const;

  bool same_as(const LabeledGraph& o) const { return d_ == o.d_; }
  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b);

 private:
  struct Data {
    std::vector<std::string> names;
    std::vector<Order> orders;
    std::vector<VertexSet> adj;
    std::unordered_map<std::string, int> index;
  };
  std::shared_ptr<const Data> d_;
};

VertexSet link(const LabeledGraph& g, const VertexSet& s);
VertexSet star(const LabeledGraph& g, const VertexSet& s);
inline VertexSet link(const LabeledGraph& g, int v) { return g.neighbors(v); }
inline VertexSet star(const LabeledGraph& g, int v) {
  VertexSet s = g.neighbors(v);
  s.insert(v);
  return s;
}

// Connected components of the subgraph induced on `within`, ordered by smallest vertex.
std::vector<VertexSet> components(const LabeledGraph& g, const VertexSet& within);
std::vector<VertexSet> components_minus_star(const LabeledGraph& g, int v);
bool is_connected(const LabeledGraph& g);
VertexSet center_vertices(const LabeledGraph& g);
// True when some vertex is adjacent to every other vertex.
bool is_star_of_vertex(const LabeledGraph& g);

// Induced subgraph; `old_index[i]` is the base index of the new vertex i.
struct InducedSubgraph {
  LabeledGraph graph;
  std::vector<int> old_index;
  std::vector<int> new_index;  // -1 when not kept
};
InducedSubgraph induced_subgraph(const LabeledGraph& g, const VertexSet& keep);
std::vector<LabeledGraph> free_factors(const LabeledGraph& g);

LabeledGraph parse_graph(const std::string& json_text);
std::string serialize_graph(const LabeledGraph& g);
std::string format_set(const LabeledGraph& g, const VertexSet& s);

}  // namespace gpab
