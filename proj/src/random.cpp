#include "gpab/random.hpp"

#include <string>

namespace gpab {

uint64_t SplitMix64::next() {
  uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t SplitMix64::below(uint64_t n) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return r % n;
}

double SplitMix64::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

LabeledGraph random_graph(SplitMix64& rng, const RandomGraphOptions& options) {
  const int n = options.vertices;
  std::vector<std::string> names;
  std::vector<Order> orders;
  for (int i = 0; i < n; ++i) {
    names.push_back("v" + std::to_string(i + 1));
    orders.push_back(options.orders[rng.below(options.orders.size())]);
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(options.edge_prob)) edges.emplace_back(i, j);
  return LabeledGraph(std::move(names), std::move(orders), edges);
}

LabeledGraph seeded_graph(uint64_t seed, int index, int max_vertices, double edge_prob,
                          const std::vector<Order>& orders) {
  SplitMix64 rng(seed ^ (0xd1b54a32d192ed03ULL * static_cast<uint64_t>(index + 1)));
  RandomGraphOptions opt;
  opt.vertices = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_vertices)));
  opt.edge_prob = edge_prob;
  opt.orders = orders;
  return random_graph(rng, opt);
}

}  // namespace gpab
