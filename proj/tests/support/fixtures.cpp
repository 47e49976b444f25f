#include "fixtures.hpp"

#include <stdexcept>

namespace gpab::testing {

LabeledGraph graph(const std::vector<std::string>& vertices, const std::vector<std::string>& edges) {
  std::vector<std::string> names;
  std::vector<Order> orders;
  for (const auto& token : vertices) {
    const auto colon = token.find(':');
    names.push_back(token.substr(0, colon));
    orders.push_back(colon == std::string::npos ? Order::infinite()
                                                : Order::parse(token.substr(colon + 1)));
  }
  auto index = [&](const std::string& n) {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return static_cast<int>(i);
    throw std::invalid_argument("unknown vertex " + n);
  };
  std::vector<std::pair<int, int>> es;
  for (const auto& e : edges) {
    const auto dash = e.find('-');
    es.emplace_back(index(e.substr(0, dash)), index(e.substr(dash + 1)));
  }
  return LabeledGraph(std::move(names), std::move(orders), es);
}

LabeledGraph fixture(const std::string& name) {
  if (name == "F1") return graph({"u", "v"}, {});
  if (name == "F2") return graph({"a:2", "b"}, {"a-b"});
  if (name == "F3") return graph({"a", "b", "c"}, {"a-b", "b-c"});
  if (name == "F4") return graph({"x:2", "y:2", "z:2"}, {});
  if (name == "F5") return graph({"a:2", "b", "c"}, {"a-b", "b-c"});
  if (name == "F6") return graph({"x:2", "y:2"}, {});
  if (name == "F7") return graph({"x:3", "y:2", "w:2"}, {});
  throw std::invalid_argument("unknown fixture " + name);
}

std::vector<std::pair<std::string, LabeledGraph>> all_fixtures() {
  std::vector<std::pair<std::string, LabeledGraph>> out;
  for (const char* n : {"F1", "F2", "F3", "F4", "F5", "F6", "F7"}) out.emplace_back(n, fixture(n));
  return out;
}

VertexSet vs(const LabeledGraph& g, const std::vector<std::string>& names) {
  VertexSet s;
  for (const auto& n : names) s.insert(g.index(n));
  return s;
}

GroupElement elem(const LabeledGraph& g, const std::string& text) { return normal_form(g, parse_word(g, text)); }

std::vector<LabeledGraph> catalog_coverage_graphs() {
  return {
      graph({"v:2", "a:2", "w:2", "b:2", "c"}, {"v-a", "a-w", "w-b", "b-v"}),
      graph({"v:2", "a:2", "w:2", "b:2", "c:3", "d"}, {"v-a", "a-w", "w-b", "b-v", "c-d"}),
  };
}

std::vector<Order> mixed_orders() {
  return {Order::infinite(), Order::infinite(), Order::prime_power(2, 1), Order::prime_power(3, 1),
          Order::prime_power(2, 2)};
}

}  // namespace gpab::testing
