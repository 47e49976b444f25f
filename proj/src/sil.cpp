#include "gpab/sil.hpp"

namespace gpab {

const char* to_string(SilKind k) {
  switch (k) {
    case SilKind::SIL: return "SIL";
    case SilKind::NonCoxeterSIL: return "NonCoxeterSIL";
    case SilKind::STIL: return "STIL";
    case SilKind::FSIL: return "FSIL";
  }
  return "?";
}

namespace {

std::vector<VertexSet> separated(const LabeledGraph& g, const VertexSet& removed, const VertexSet& avoid) {
  std::vector<VertexSet> out;
  for (const auto& c : components(g, g.all() - removed))
    if (!c.intersects(avoid)) out.push_back(c);
  return out;
}

}  // namespace

std::vector<VertexSet> sil_components(const LabeledGraph& g, int x, int y) {
  if (x == y || g.adjacent(x, y)) return {};
  return separated(g, g.neighbors(x) & g.neighbors(y), VertexSet{x, y});
}

bool is_sil(const LabeledGraph& g, int x, int y, int w) {
  for (const auto& c : sil_components(g, x, y))
    if (c.contains(w)) return true;
  return false;
}

bool is_virtually_abelian_triple(const LabeledGraph& g, int x, int y, int z) {
  const int pairs[3][2] = {{x, y}, {y, z}, {x, z}};
  int missing = 0;
  int a = -1, b = -1;
  for (const auto& p : pairs) {
    if (!g.adjacent(p[0], p[1])) {
      ++missing;
      a = p[0];
      b = p[1];
    }
  }
  if (missing == 0) return true;
  return missing == 1 && g.order(a).is_two() && g.order(b).is_two();
}

std::vector<VertexSet> stil_components(const LabeledGraph& g, int x, int y, int z) {
  if (x == y || y == z || x == z || is_virtually_abelian_triple(g, x, y, z)) return {};
  return separated(g, g.neighbors(x) & g.neighbors(y) & g.neighbors(z), VertexSet{x, y, z});
}

bool is_fsil(const LabeledGraph& g, int x, int y, int z) {
  return is_sil(g, x, y, z) && is_sil(g, y, z, x) && is_sil(g, z, x, y);
}

std::vector<SilWitness> find_sils(const LabeledGraph& g) {
  const int n = g.size();
  std::vector<SilWitness> out;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const bool coxeter = g.order(x).is_two() && g.order(y).is_two();
      for (const auto& c : sil_components(g, x, y))
        out.push_back({coxeter ? SilKind::SIL : SilKind::NonCoxeterSIL, {x, y}, c});
    }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z)
        for (const auto& c : stil_components(g, x, y, z)) out.push_back({SilKind::STIL, {x, y, z}, c});
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z)
        if (is_fsil(g, x, y, z)) out.push_back({SilKind::FSIL, {x, y, z}, VertexSet{x, y, z}});
  return out;
}

bool has_non_coxeter_sil(const LabeledGraph& g) {
  for (int x = 0; x < g.size(); ++x)
    for (int y = x + 1; y < g.size(); ++y)
      if (!(g.order(x).is_two() && g.order(y).is_two()) && !sil_components(g, x, y).empty())
        return true;
  return false;
}

bool has_stil(const LabeledGraph& g) {
  const int n = g.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z)
        if (!stil_components(g, x, y, z).empty()) return true;
  return false;
}

bool has_fsil(const LabeledGraph& g) {
  const int n = g.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z)
        if (is_fsil(g, x, y, z)) return true;
  return false;
}

bool has_no_free_sil(const LabeledGraph& g) {
  return !has_non_coxeter_sil(g) && !has_stil(g) && !has_fsil(g);
}

bool pc_commute(const LabeledGraph& g, int x, const VertexSet& c, int y, const VertexSet& d) {
  const auto comps = sil_components(g, x, y);
  if (comps.empty()) return true;
  if (d.contains(x) && c.contains(y)) return false;
  for (const auto& comp : comps) {
    for (int z : comp) {
      if (c.contains(z) && c == d) return false;
      if (d.contains(x) && c.contains(z)) return false;
      if (c.contains(y) && d.contains(z)) return false;
    }
  }
  return true;
}

}  // namespace gpab
