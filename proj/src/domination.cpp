#include "gpab/domination.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace gpab {

const char* to_string(ClassKind k) {
  switch (k) {
    case ClassKind::Free: return "Free";
    case ClassKind::FreeAbelian: return "FreeAbelian";
    case ClassKind::FiniteAbelianP: return "FiniteAbelianP";
  }
  return "?";
}

bool dominates(const LabeledGraph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.size() || v >= g.size())
    throw Error(ErrorCode::UnknownVertex, "dominates");
  if (u == v) return true;
  const Order ou = g.order(u), ov = g.order(v);
  if (ou.is_infinite()) return g.neighbors(u).subset_of(star(g, v));
  // Finite u: v must be a power of the same prime, and st(u) within st(v).
  return ov.is_finite() && ov.p == ou.p && star(g, u).subset_of(star(g, v));
}

bool dominates_inf(const LabeledGraph& g, int u, int v) {
  return g.order(u).is_infinite() && dominates(g, u, v);
}

int64_t transvection_power(const LabeledGraph& g, int u, int v) {
  const Order ou = g.order(u), ov = g.order(v);
  if (ou.is_infinite() || ov.e <= ou.e) return 1;
  return Order{ou.p, ov.e - ou.e}.value();
}

DominationData equivalence_classes(const LabeledGraph& g) {
  const int n = g.size();
  DominationData d;
  d.leq.resize(n);
  d.leq_inf.resize(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (dominates(g, u, v)) d.leq[u].insert(v);
  for (int u = 0; u < n; ++u)
    if (g.order(u).is_infinite()) d.leq_inf[u] = d.leq[u];

  d.class_of.assign(n, -1);
  for (int u = 0; u < n; ++u) {
    if (d.class_of[u] >= 0) continue;
    VertexSet cls;
    for (int v = u; v < n; ++v)
      if (d.le(u, v) && d.le(v, u)) cls.insert(v);
    for (int v : cls) d.class_of[v] = static_cast<int>(d.classes.size());
    d.classes.push_back(cls);
    const int rep = cls.first();
    const Order o = g.order(rep);
    if (o.is_finite()) {
      d.kinds.push_back(ClassKind::FiniteAbelianP);
      d.class_prime.push_back(o.p);
    } else {
      const bool clique = std::all_of(cls.begin(), cls.end(), [&](int v) {
        return (cls - VertexSet{v}).subset_of(g.neighbors(v));
      });
      d.kinds.push_back(cls.size() >= 2 && !clique ? ClassKind::Free : ClassKind::FreeAbelian);
      d.class_prime.push_back(0);
    }
  }
  for (const auto& cls : d.classes) {
    const int rep = cls.first();
    d.maximal.push_back(std::all_of(d.leq[rep].begin(), d.leq[rep].end(),
                                    [&](int w) { return d.le(w, rep); }));
  }

  d.class_inf_of.assign(n, -1);
  for (int u = 0; u < n; ++u) {
    if (d.class_inf_of[u] >= 0) continue;
    VertexSet cls{u};
    if (g.order(u).is_infinite())
      for (int v = u + 1; v < n; ++v)
        if (d.le_inf(u, v) && d.le_inf(v, u)) cls.insert(v);
    for (int v : cls) d.class_inf_of[v] = static_cast<int>(d.classes_inf.size());
    d.classes_inf.push_back(cls);
  }
  return d;
}

CompressedGraph compressed_graph(const LabeledGraph& g, const DominationData& d) {
  CompressedGraph c;
  c.classes = d.classes;
  c.kinds = d.kinds;
  const int k = static_cast<int>(d.classes.size());
  c.adjacency.resize(k);
  for (auto [u, v] : g.edges()) {
    const int a = d.class_of[u], b = d.class_of[v];
    if (a == b) continue;
    c.adjacency[a].insert(b);
    c.adjacency[b].insert(a);
  }
  return c;
}

CompressedGraph compressed_graph(const LabeledGraph& g) {
  return compressed_graph(g, equivalence_classes(g));
}

std::optional<VertexSet> leaf_like(const LabeledGraph& g, const DominationData& d, int u) {
  const VertexSet lk = g.neighbors(u);
  std::optional<VertexSet> found;
  for (size_t c = 0; c < d.classes.size(); ++c) {
    if (!d.maximal[c] || !d.classes[c].subset_of(lk)) continue;
    if (found) return std::nullopt;
    found = d.classes[c];
  }
  if (!found || !d.le(u, found->first())) return std::nullopt;
  const VertexSet& y = *found;
  for (int a : y)
    if (!(y - VertexSet{a}).subset_of(g.neighbors(a)))
      throw std::logic_error("leaf-like class is not abelian");
  return found;
}

std::optional<VertexSet> leaf_like(const LabeledGraph& g, int u) {
  return leaf_like(g, equivalence_classes(g), u);
}

std::vector<VertexSet> bridged_components(const LabeledGraph& g, int v) {
  const VertexSet st = star(g, v);
  const VertexSet outside = g.all() - st;
  // Connectivity in Γ with every edge inside st(v) removed.
  std::vector<VertexSet> out;
  VertexSet left = outside;
  while (!left.empty()) {
    const int start = left.first();
    VertexSet comp{start}, frontier{start};
    while (!frontier.empty()) {
      VertexSet next;
      for (int w : frontier) {
        VertexSet nb = g.neighbors(w);
        if (st.contains(w)) nb -= st;
        next |= nb;
      }
      next -= comp;
      comp |= next;
      frontier = next;
    }
    comp &= outside;
    left -= comp;
    out.push_back(comp);
  }
  return out;
}

namespace {

// longest[a][b]: number of ≤_∞-classes on a longest strict chain from class a to class b, 0 if none.
std::vector<std::vector<int>> longest_chains(const DominationData& d) {
  const int k = static_cast<int>(d.classes_inf.size());
  std::vector<std::vector<int>> succ(k);
  for (int a = 0; a < k; ++a) {
    const int rep = d.classes_inf[a].first();
    for (int v : d.leq_inf[rep]) {
      const int b = d.class_inf_of[v];
      if (b != a && std::find(succ[a].begin(), succ[a].end(), b) == succ[a].end()) succ[a].push_back(b);
    }
  }
  std::vector<std::vector<int>> memo(k, std::vector<int>(k, -1));
  std::function<int(int, int)> go = [&](int a, int b) -> int {
    if (memo[a][b] >= 0) return memo[a][b];
    int best = a == b ? 1 : 0;
    for (int c : succ[a]) {
      const int r = go(c, b);
      if (r > 0) best = std::max(best, r + 1);
    }
    return memo[a][b] = best;
  };
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) go(a, b);
  return memo;
}

int depth_with(const LabeledGraph& g, const DominationData& d,
               const std::vector<std::vector<int>>& chains, int v) {
  const int target = d.class_inf_of[v];
  const VertexSet st_v = star(g, v);
  int best = 1;
  for (int w = 0; w < g.size(); ++w) {
    const int len = chains[d.class_inf_of[w]][target];
    if (len == 0) continue;
    best = std::max(best, len);
    int outside = 0;
    for (const auto& c : components_minus_star(g, w))
      if (!c.subset_of(st_v)) ++outside;
    if (outside >= 2) best = std::max(best, len + 1);
  }
  return best;
}

}  // namespace

int infinity_depth(const LabeledGraph& g, const DominationData& d, int v) {
  return depth_with(g, d, longest_chains(d), v);
}

int infinity_depth(const LabeledGraph& g, int v) {
  return infinity_depth(g, equivalence_classes(g), v);
}

int infinity_depth_graph(const LabeledGraph& g, const DominationData& d) {
  const auto chains = longest_chains(d);
  int best = 1;
  for (int v = 0; v < g.size(); ++v)
    if (!g.order(v).is_two()) best = std::max(best, depth_with(g, d, chains, v));
  return best;
}

int infinity_depth_graph(const LabeledGraph& g) {
  return infinity_depth_graph(g, equivalence_classes(g));
}

}  // namespace gpab
