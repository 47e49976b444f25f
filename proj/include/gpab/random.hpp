#pragma once

#include <cstdint>
#include <vector>

#include "gpab/graph.hpp"

namespace gpab {

// SplitMix64: state += 0x9e3779b97f4a7c15, then the standard xor-shift-multiply finalizer.
// Chosen for bit-identical output on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next();
  // Uniform in [0, n) by rejection; n > 0.
  uint64_t below(uint64_t n);
  // Uniform double in [0, 1) from the top 53 bits.
  double unit();
  bool bernoulli(double p) { return unit() < p; }

 private:
  uint64_t state_;
};

struct RandomGraphOptions {
  int vertices = 4;
  double edge_prob = 0.5;
  // Each vertex order is drawn uniformly from this list.
  std::vector<Order> orders = {Order::infinite()};
};

// Vertices are named v1..vn.
LabeledGraph random_graph(SplitMix64& rng, const RandomGraphOptions& options);

// The i-th graph of a seeded family: vertex count drawn from [1, max_vertices].
LabeledGraph seeded_graph(uint64_t seed, int index, int max_vertices, double edge_prob,
                          const std::vector<Order>& orders);

}  // namespace gpab
