#include "properties.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gpab/autos.hpp"
#include "gpab/domination.hpp"
#include "gpab/random.hpp"
#include "gpab/sil.hpp"
#include "gpab/structure.hpp"

namespace gpab::testing {

namespace {

std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) out.push_back({a, b});
  return out;
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  return names;
}

// Smallest edge mask over all relabelings.
uint32_t canonical_mask(uint32_t mask, int n, const std::vector<std::pair<int, int>>& pairs,
                        const std::vector<std::vector<int>>& pair_index) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  uint32_t best = UINT32_MAX;
  do {
    uint32_t m = 0;
    for (size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) m |= 1u << pair_index[perm[pairs[i].first]][perm[pairs[i].second]];
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string describe(const LabeledGraph& g) { return serialize_graph(g); }

}  // namespace

std::vector<LabeledGraph> unlabeled_graphs(int n) {
  const auto pairs = all_pairs(n);
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  for (size_t i = 0; i < pairs.size(); ++i) {
    index[pairs[i].first][pairs[i].second] = static_cast<int>(i);
    index[pairs[i].second][pairs[i].first] = static_cast<int>(i);
  }
  std::set<uint32_t> seen;
  std::vector<LabeledGraph> out;
  for (uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    const uint32_t c = canonical_mask(mask, n, pairs, index);
    if (c != mask || !seen.insert(c).second) continue;
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    out.emplace_back(default_names(n), std::vector<Order>(n, Order::infinite()), edges);
  }
  return out;
}

LabeledGraph with_orders(const LabeledGraph& g, const std::vector<Order>& orders) {
  return LabeledGraph(g.names(), orders, g.edges());
}

bool is_connected_non_star(const LabeledGraph& g) { return g.size() >= 2 && is_connected(g) && !is_star_of_vertex(g); }

std::vector<LabeledGraph> connected_non_star_family(int max_vertices, const std::vector<Order>& orders, int draws,
                                                    uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<LabeledGraph> out;
  for (int n = 2; n <= max_vertices; ++n)
    for (const auto& shape : unlabeled_graphs(n)) {
      if (!is_connected_non_star(shape)) continue;
      for (int d = 0; d < draws; ++d) {
        std::vector<Order> os;
        for (int i = 0; i < n; ++i) os.push_back(orders[rng.below(orders.size())]);
        out.push_back(with_orders(shape, os));
      }
    }
  return out;
}

std::vector<std::string> extended_graph_violations(const LabeledGraph& g) {
  std::vector<std::string> out;
  const ExtendedGraph x = extended_graph(g);
  const LabeledGraph& h = x.graph;
  const int n = g.size(), m = h.size();
  const DominationData dh = equivalence_classes(h);
  for (const auto& cls : dh.classes)
    if (cls.size() != 1) out.push_back("class " + format_set(h, cls) + " is not a singleton in " + describe(g));

  const DominationData dg = equivalence_classes(g);
  for (int u = 0; u < n; ++u) {
    const auto y = leaf_like(g, dg, u);
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const bool leaf = y && y->contains(v);
      if (dh.le(u, v) != leaf)
        out.push_back("extended domination " + g.name(u) + " <= " + g.name(v) + " disagrees with leaf-like in " +
                      describe(g));
    }
  }
  for (int u = 0; u < n; ++u)
    for (int w = n; w < m; ++w)
      if (dh.le(u, w)) out.push_back("added vertex " + h.name(w) + " dominates " + g.name(u) + " in " + describe(g));

  const VertexSet base = g.all();
  for (int v = 0; v < n; ++v) {
    std::vector<VertexSet> traces;
    for (const auto& c : components_minus_star(h, v))
      if (c.intersects(base)) traces.push_back(c & base);
    std::sort(traces.begin(), traces.end());
    auto bridged = bridged_components(g, v);
    std::sort(bridged.begin(), bridged.end());
    if (traces != bridged)
      out.push_back("bridged components of " + g.name(v) + " differ from extended traces in " + describe(g));
  }
  return out;
}

std::vector<std::string> kernel_commutation_failures(const LabeledGraph& g, int bound) {
  std::vector<std::string> out;
  const auto gens = projection_kernel_generators(g);
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!commute_in_out_bounded(gens[i].aut, gens[j].aut, bound))
        out.push_back(gens[i].name + " / " + gens[j].name + " in " + describe(g));
  return out;
}

std::vector<std::string> pc_commute_mismatches(const LabeledGraph& g, int bound) {
  std::vector<std::string> out;
  for (int x = 0; x < g.size(); ++x)
    for (const auto& c : components_minus_star(g, x))
      for (int y = 0; y < g.size(); ++y) {
        if (y == x) continue;
        for (const auto& d : components_minus_star(g, y)) {
          const bool graphical = pc_commute(g, x, c, y, d);
          const bool computed = commute_in_out_bounded(partial_conjugation(g, x, c), partial_conjugation(g, y, d), bound);
          if (graphical != computed)
            out.push_back(g.name(x) + format_set(g, c) + " / " + g.name(y) + format_set(g, d) + " in " + describe(g));
        }
      }
  return out;
}

OverlapCount overlapping_sils_exhaustive(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : all_pairs(n))
    if (p != std::pair{0, 1} && p != std::pair{1, 2}) pairs.push_back(p);
  const auto names = default_names(n);
  const std::vector<Order> orders(n, Order::infinite());
  OverlapCount count;
  for (uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    const LabeledGraph g(names, orders, edges);
    ++count.graphs;
    if (!is_sil(g, 0, 1, 3) || !is_sil(g, 1, 2, 3)) continue;
    ++count.overlapping;
    bool stil = false;
    for (const auto& c : stil_components(g, 0, 1, 2)) stil = stil || c.contains(3);
    if (!stil) ++count.violations;
  }
  return count;
}

}  // namespace gpab::testing
