#include "gpab/graph.hpp"

#include <algorithm>
#include <charconv>

#include "json.hpp"

namespace gpab {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Order Order::prime_power(uint32_t p, uint32_t e) {
  if (!is_prime(p) || e == 0) throw Error(ErrorCode::NonPrimePower, "invalid prime power");
  Order o{p, e};
  (void)o.value();
  return o;
}

Order Order::parse(const std::string& text) {
  if (text == "inf") return infinite();
  uint64_t n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || ptr != text.data() + text.size() || n < 2)
    throw Error(ErrorCode::NonPrimePower, "order '" + text + "'");
  uint64_t p = 0;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = n;
  uint32_t e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1 || p > UINT32_MAX) throw Error(ErrorCode::NonPrimePower, "order '" + text + "'");
  return Order{static_cast<uint32_t>(p), e};
}

int64_t Order::value() const {
  int64_t v = 1;
  for (uint32_t i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(v, static_cast<int64_t>(p), &v))
      throw Error(ErrorCode::Overflow, "order too large");
  }
  return v;
}

std::string Order::to_string() const {
  return is_infinite() ? "inf" : std::to_string(value());
}

LabeledGraph::LabeledGraph() : d_(std::make_shared<Data>()) {}

LabeledGraph::LabeledGraph(std::vector<std::string> names, std::vector<Order> orders,
                           const std::vector<std::pair<int, int>>& edges) {
  auto d = std::make_shared<Data>();
  if (names.size() != orders.size())
    throw Error(ErrorCode::MalformedJson, "names/orders length mismatch");
  if (names.size() > VertexSet::kCapacity)
    throw Error(ErrorCode::SizeCapExceeded, "too many vertices");
  d->names = std::move(names);
  d->orders = std::move(orders);
  d->adj.resize(d->names.size());
  for (size_t i = 0; i < d->names.size(); ++i) {
    if (!d->index.emplace(d->names[i], static_cast<int>(i)).second)
      throw Error(ErrorCode::DuplicateVertex, d->names[i]);
  }
  const int n = static_cast<int>(d->names.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error(ErrorCode::UnknownVertex, "edge endpoint");
    if (u == v) throw Error(ErrorCode::LoopEdge, d->names[u]);
    d->adj[u].insert(v);
    d->adj[v].insert(u);
  }
  d_ = std::move(d);
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    for (int v : d_->adj[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int LabeledGraph::edge_count() const {
  int c = 0;
  for (const auto& a : d_->adj) c += a.size();
  return c / 2;
}

int LabeledGraph::index(const std::string& name) const {
  auto it = d_->index.find(name);
  if (it == d_->index.end()) throw Error(ErrorCode::UnknownVertex, name);
  return it->second;
}

std::optional<int> LabeledGraph::find(const std::string& name) const {
  auto it = d_->index.find(name);
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->names == b.d_->names && a.d_->orders == b.d_->orders && a.d_->adj == b.d_->adj;
}

VertexSet link(const LabeledGraph& g, const VertexSet& s) {
  VertexSet out = g.all();
  for (int v : s) {
    if (v >= g.size()) throw Error(ErrorCode::UnknownVertex, std::to_string(v));
    out &= g.neighbors(v);
  }
  return out - s;
}

VertexSet star(const LabeledGraph& g, const VertexSet& s) { return s | link(g, s); }

std::vector<VertexSet> components(const LabeledGraph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    int start = left.first();
    VertexSet comp{start};
    VertexSet frontier{start};
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next &= within;
      next -= comp;
      comp |= next;
      frontier = next;
    }
    left -= comp;
    out.push_back(comp);
  }
  return out;
}

std::vector<VertexSet> components_minus_star(const LabeledGraph& g, int v) {
  if (v < 0 || v >= g.size()) throw Error(ErrorCode::UnknownVertex, std::to_string(v));
  return components(g, g.all() - star(g, v));
}

bool is_connected(const LabeledGraph& g) { return components(g, g.all()).size() <= 1; }

VertexSet center_vertices(const LabeledGraph& g) {
  VertexSet out;
  const VertexSet all = g.all();
  for (int v = 0; v < g.size(); ++v)
    if (star(g, v) == all) out.insert(v);
  return out;
}

bool is_star_of_vertex(const LabeledGraph& g) { return !center_vertices(g).empty(); }

InducedSubgraph induced_subgraph(const LabeledGraph& g, const VertexSet& keep) {
  InducedSubgraph out;
  out.new_index.assign(g.size(), -1);
  std::vector<std::string> names;
  std::vector<Order> orders;
  for (int v : keep) {
    out.new_index[v] = static_cast<int>(out.old_index.size());
    out.old_index.push_back(v);
    names.push_back(g.name(v));
    orders.push_back(g.order(v));
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (keep.contains(u) && keep.contains(v)) edges.emplace_back(out.new_index[u], out.new_index[v]);
  out.graph = LabeledGraph(std::move(names), std::move(orders), edges);
  return out;
}

std::vector<LabeledGraph> free_factors(const LabeledGraph& g) {
  std::vector<LabeledGraph> out;
  for (const auto& c : components(g, g.all())) out.push_back(induced_subgraph(g, c).graph);
  return out;
}

LabeledGraph parse_graph(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedJson, e.what());
  }
  try {
    std::vector<std::string> names;
    std::vector<Order> orders;
    for (const auto& v : j.at("vertices")) {
      names.push_back(v.at("name").get<std::string>());
      const auto& o = v.at("order");
      orders.push_back(Order::parse(o.is_string() ? o.get<std::string>() : o.dump()));
    }
    std::unordered_map<std::string, int> idx;
    for (size_t i = 0; i < names.size(); ++i) {
      if (!idx.emplace(names[i], static_cast<int>(i)).second)
        throw Error(ErrorCode::DuplicateVertex, names[i]);
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::MalformedJson, "edge must be a pair");
      auto a = e[0].get<std::string>(), b = e[1].get<std::string>();
      auto ia = idx.find(a), ib = idx.find(b);
      if (ia == idx.end()) throw Error(ErrorCode::UnknownVertex, a);
      if (ib == idx.end()) throw Error(ErrorCode::UnknownVertex, b);
      if (a == b) throw Error(ErrorCode::LoopEdge, a);
      edges.emplace_back(ia->second, ib->second);
    }
    return LabeledGraph(std::move(names), std::move(orders), edges);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedJson, e.what());
  }
}

std::string serialize_graph(const LabeledGraph& g) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (int v = 0; v < g.size(); ++v)
    j["vertices"].push_back({{"name", g.name(v)}, {"order", g.order(v).to_string()}});
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({g.name(u), g.name(v)});
  return j.dump();
}

std::string format_set(const LabeledGraph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ",";
    out += g.name(v);
    first = false;
  }
  return out + "}";
}

}  // namespace gpab
