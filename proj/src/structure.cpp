#include "gpab/structure.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "gpab/sil.hpp"

namespace gpab {

const char* to_string(FreeReason r) {
  switch (r) {
    case FreeReason::ClassSize2: return "ClassSize2";
    case FreeReason::NonCoxeterSIL: return "NonCoxeterSIL";
    case FreeReason::STIL: return "STIL";
    case FreeReason::FSIL: return "FSIL";
  }
  return "?";
}

namespace {

VertexSet component_containing(const LabeledGraph& g, int v, int w) {
  for (const auto& c : components_minus_star(g, v))
    if (c.contains(w)) return c;
  return {};
}

Witness conj_witness(const LabeledGraph& g, int v, const VertexSet& c) {
  return {"conjugation by " + g.name(v) + " on " + format_set(g, c),
          conjugation_on(g, c, GroupElement::generator(g, v))};
}

}  // namespace

Classification classify(const LabeledGraph& g) {
  const DominationData d = equivalence_classes(g);
  Classification out;
  out.depth = infinity_depth_graph(g, d);
  out.filtration_bound = static_cast<int>(depth_filtration(g).size());
  out.sl_blocks = special_linear_block_sizes(g);

  std::optional<VertexSet> big_class;
  for (const auto& c : d.classes_inf)
    if (c.size() >= 2) {
      big_class = c;
      break;
    }
  const auto sils = find_sils(g);
  const SilWitness* non_coxeter = nullptr;
  const SilWitness* stil = nullptr;
  const SilWitness* fsil = nullptr;
  for (const auto& s : sils) {
    if (s.kind == SilKind::NonCoxeterSIL && !non_coxeter) non_coxeter = &s;
    if (s.kind == SilKind::STIL && !stil) stil = &s;
    if (s.kind == SilKind::FSIL && !fsil) fsil = &s;
  }
  if (big_class) out.all_reasons.push_back(FreeReason::ClassSize2);
  if (non_coxeter) out.all_reasons.push_back(FreeReason::NonCoxeterSIL);
  if (stil) out.all_reasons.push_back(FreeReason::STIL);
  if (fsil) out.all_reasons.push_back(FreeReason::FSIL);

  if (out.all_reasons.empty()) {
    out.ses_note = "no free SIL and singleton infinite classes: Out is virtually nilpotent of class " +
                   std::to_string(out.depth) + " (depth filtration length " +
                   std::to_string(out.filtration_bound) + ")";
    return out;
  }
  out.free_subgroup = true;
  out.reason = out.all_reasons.front();
  switch (out.reason) {
    case FreeReason::ClassSize2: {
      const auto vs = big_class->to_vector();
      const int u = vs[0], v = vs[1];
      out.witnesses.push_back({"square of " + make_transvection(g, v, u).name,
                               power(transvection(g, v, u), 2)});
      out.witnesses.push_back({"square of " + make_transvection(g, u, v).name,
                               power(transvection(g, u, v), 2)});
      break;
    }
    case FreeReason::NonCoxeterSIL:
      for (int x : non_coxeter->vertices) out.witnesses.push_back(conj_witness(g, x, non_coxeter->component));
      break;
    case FreeReason::STIL:
      for (int x : stil->vertices) out.witnesses.push_back(conj_witness(g, x, stil->component));
      break;
    case FreeReason::FSIL: {
      const auto& t = fsil->vertices;
      for (int i = 0; i < 3; ++i) {
        const int x = t[i], y = t[(i + 1) % 3];
        out.witnesses.push_back(conj_witness(g, x, component_containing(g, x, y)));
      }
      break;
    }
  }
  out.ses_note = std::string("contains a nonabelian free subgroup (") + to_string(out.reason) + ")";
  return out;
}

namespace {

uint32_t next_prime(uint32_t p) {
  do ++p;
  while (!is_prime(p));
  return p;
}

void require_connected_non_star(const LabeledGraph& g) {
  if (g.size() == 0 || !is_connected(g) || is_star_of_vertex(g))
    throw Error(ErrorCode::NotConnectedOrIsStar, "graph must be connected and not the star of a vertex");
}

}  // namespace

int extended_graph_size(const LabeledGraph& g) {
  const DominationData d = equivalence_classes(g);
  int size = g.size() + 2;
  for (size_t c = 0; c < d.classes.size(); ++c)
    if (d.maximal[c]) {
      const int l = link(g, d.classes[c]).size();
      size += l >= 30 ? VertexSet::kCapacity : (1 << l) - 1;
    }
  return size;
}

ExtendedGraph extended_graph(const LabeledGraph& g, int cap) {
  require_connected_non_star(g);
  const int size = extended_graph_size(g);
  if (size > cap || size > VertexSet::kCapacity)
    throw Error(ErrorCode::SizeCapExceeded, std::to_string(size) + " vertices");
  const DominationData d = equivalence_classes(g);
  ExtendedGraph x;
  x.base = g;
  std::vector<std::string> names = g.names();
  std::vector<Order> orders = g.orders();
  std::vector<std::pair<int, int>> edges = g.edges();
  uint32_t prime = 1;
  for (const auto& o : g.orders())
    if (o.is_finite()) prime = std::max(prime, o.p);
  auto add_vertex = [&](const std::string& name) {
    prime = next_prime(prime);
    names.push_back(name);
    orders.push_back(Order{prime, 1});
    return static_cast<int>(names.size()) - 1;
  };
  x.cone1 = add_vertex("#cone1");
  x.cone2 = add_vertex("#cone2");
  for (int v = 0; v < g.size(); ++v) {
    edges.emplace_back(x.cone1, v);
    edges.emplace_back(x.cone2, v);
  }
  for (size_t c = 0; c < d.classes.size(); ++c) {
    if (!d.maximal[c]) continue;
    const VertexSet& cls = d.classes[c];
    const std::vector<int> lk = link(g, cls).to_vector();
    for (uint32_t mask = 1; mask < (1u << lk.size()); ++mask) {
      VertexSet s;
      for (size_t i = 0; i < lk.size(); ++i)
        if (mask >> i & 1) s.insert(lk[i]);
      const int idx = add_vertex("#" + format_set(g, cls) + "_" + format_set(g, s));
      for (int v : cls | s) edges.emplace_back(idx, v);
      x.class_vertices.push_back({idx, cls, s});
    }
  }
  x.graph = LabeledGraph(std::move(names), std::move(orders), edges);
  return x;
}

std::vector<Generator> projection_kernel_generators(const LabeledGraph& g) {
  require_connected_non_star(g);
  const DominationData d = equivalence_classes(g);
  std::vector<Generator> out;
  for (int u = 0; u < g.size(); ++u)
    if (auto y = leaf_like(g, d, u))
      for (int v : *y) out.push_back(make_transvection(g, u, v));
  for (int v = 0; v < g.size(); ++v)
    for (const auto& c : bridged_components(g, v)) out.push_back(make_partial_conjugation(g, v, c));
  return out;
}

std::optional<StarDecomposition> star_decomposition(const LabeledGraph& g) {
  const VertexSet k = center_vertices(g);
  if (k.empty()) return std::nullopt;
  StarDecomposition s;
  s.center = k;
  s.gamma_prime = g.all() - k;
  for (int u : s.gamma_prime)
    for (int w : k)
      if (dominates(g, u, w)) s.transvections.push_back(make_transvection(g, u, w));
  return s;
}

std::vector<std::vector<int>> compressed_symmetries(const LabeledGraph& g) {
  const DominationData d = equivalence_classes(g);
  const CompressedGraph c = compressed_graph(g, d);
  const int k = static_cast<int>(c.classes.size());
  using Label = std::tuple<ClassKind, int, std::vector<std::pair<uint32_t, uint32_t>>>;
  std::vector<Label> labels;
  for (int i = 0; i < k; ++i) {
    std::vector<std::pair<uint32_t, uint32_t>> os;
    for (int v : c.classes[i]) os.emplace_back(g.order(v).p, g.order(v).e);
    std::sort(os.begin(), os.end());
    labels.emplace_back(c.kinds[i], c.classes[i].size(), os);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> perm(k, -1);
  std::vector<char> used(k, 0);
  std::function<void(int)> go = [&](int i) {
    if (i == k) {
      out.push_back(perm);
      return;
    }
    for (int j = 0; j < k; ++j) {
      if (used[j] || labels[i] != labels[j]) continue;
      bool ok = true;
      for (int a = 0; a < i && ok; ++a)
        ok = c.adjacency[i].contains(a) == c.adjacency[j].contains(perm[a]);
      if (!ok) continue;
      used[j] = 1;
      perm[i] = j;
      go(i + 1);
      used[j] = 0;
    }
  };
  go(0);
  return out;
}

namespace {

// Longest chain of vertices in distinct ≤_∞-classes from `from` up to `to`.
std::vector<int> longest_chain(const DominationData& d, int n, int from, int to) {
  if (d.class_inf_of[from] == d.class_inf_of[to]) return {to};
  std::vector<int> best;
  for (int w = 0; w < n; ++w) {
    if (w == from || d.class_inf_of[w] == d.class_inf_of[from]) continue;
    if (!d.le_inf(from, w) || !(w == to || d.le_inf(w, to))) continue;
    auto rest = longest_chain(d, n, w, to);
    if (!rest.empty() && rest.size() + 1 > best.size()) {
      rest.insert(rest.begin(), from);
      best = std::move(rest);
    }
  }
  return best;
}

}  // namespace

std::optional<DepthWitness> depth_witness(const LabeledGraph& g, int bound) {
  const DominationData d = equivalence_classes(g);
  const int n = g.size();
  const int depth = infinity_depth_graph(g, d);
  if (depth < 2) return std::nullopt;
  std::optional<DepthWitness> found;
  for (int v = 0; v < n && !found; ++v) {
    if (g.order(v).is_two() || infinity_depth(g, d, v) != depth) continue;
    for (int w = 0; w < n && !found; ++w) {
      if (!(w == v || d.le_inf(w, v))) continue;
      const auto chain = longest_chain(d, n, w, v);
      if (static_cast<int>(chain.size()) == depth) {
        found = DepthWitness{chain, false, {}, false, false, false};
        break;
      }
      if (static_cast<int>(chain.size()) + 1 == depth) {
        const VertexSet st_v = star(g, v);
        for (const auto& c : components_minus_star(g, w))
          if (!c.subset_of(st_v)) {
            found = DepthWitness{chain, true, c, false, false, false};
            break;
          }
      }
    }
  }
  if (!found) return std::nullopt;
  DepthWitness& dw = *found;
  const auto& ch = dw.chain;
  const int c = static_cast<int>(ch.size());
  Automorphism lhs, rhs;
  if (!dw.uses_components) {
    lhs = transvection(g, ch[c - 2], ch[c - 1]);
    for (int i = c - 2; i >= 1; --i) lhs = commutator(lhs, transvection(g, ch[i - 1], ch[i]));
    rhs = transvection(g, ch[0], ch[c - 1]);
  } else {
    lhs = partial_conjugation(g, ch[0], dw.component);
    for (int i = 1; i < c; ++i) lhs = commutator(transvection(g, ch[i - 1], ch[i]), lhs);
    rhs = conjugation_on(g, dw.component, GroupElement::generator(g, ch[c - 1]));
  }
  dw.exact = lhs == rhs;
  dw.holds = dw.exact || equal_in_out_bounded(lhs, rhs, bound).found;
  try {
    dw.nontrivial = !is_inner_bounded(rhs, bound).found;
  } catch (const Error&) {
    dw.nontrivial = true;
  }
  return found;
}

}  // namespace gpab
