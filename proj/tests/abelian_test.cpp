#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "gpab/abelian.hpp"
#include "gpab/error.hpp"
#include "gpab/random.hpp"

using namespace gpab;
using gpab::testing::fixture;
using gpab::testing::graph;
using gpab::testing::vs;

namespace {

std::vector<LabeledGraph> random_graphs(int count, int max_vertices, uint64_t seed, double p = 0.4) {
  std::vector<LabeledGraph> out;
  for (int i = 0; i < count; ++i) out.push_back(seeded_graph(seed, i, max_vertices, p, gpab::testing::mixed_orders()));
  return out;
}

IntMatrix identity_matrix(size_t n) {
  IntMatrix m(n, std::vector<int64_t>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Generators whose composites exercise every coordinate: transvections, partial conjugations, factors.
std::vector<Generator> assorted_generators(const LabeledGraph& g) {
  std::vector<Generator> out = partial_conjugation_generators(g);
  for (int u = 0; u < g.size(); ++u) {
    for (int v = 0; v < g.size(); ++v)
      if (u != v && dominates(g, u, v)) out.push_back(make_transvection(g, u, v));
    if (g.order(u).is_infinite()) out.push_back(make_factor(g, u, -1));
    else if (g.order(u).value() > 2) out.push_back(make_factor(g, u, g.order(u).value() - 1));
  }
  return out;
}

}  // namespace

TEST(Rho, Examples) {
  const auto f1 = fixture("F1");
  const auto a = abelianized_group(f1);
  const auto t = abelian_action(a, make_transvection(f1, 0, 1).aut);
  EXPECT_EQ(t.rows[a.coordinate_of[0]][a.coordinate_of[1]], 1);
  EXPECT_EQ(t.rows[a.coordinate_of[1]][a.coordinate_of[0]], 0);
  const auto inv = abelian_action(a, make_factor(f1, 0, -1).aut);
  EXPECT_EQ(inv.rows[a.coordinate_of[0]][a.coordinate_of[0]], -1);
  const auto f3 = fixture("F3");
  EXPECT_TRUE(abelian_action(partial_conjugation(f3, f3.index("a"), vs(f3, {"c"}))).is_identity());
}

TEST(Abelianization, CoordinatesAndModuli) {
  const auto f5 = fixture("F5");
  const auto a = abelianized_group(f5);
  EXPECT_EQ(a.free_rank(), 2);
  EXPECT_EQ(a.moduli, std::vector<int64_t>{2});
  EXPECT_EQ(a.vertex_at(2), f5.index("a"));
  EXPECT_EQ(a.modulus(0), 0);
  // Dominated classes come first: c ≤ b.
  EXPECT_LT(a.coordinate_of[f5.index("c")], a.coordinate_of[f5.index("b")]);
}

TEST(Torelli, Examples) {
  const auto f3 = fixture("F3");
  EXPECT_TRUE(is_torelli(Automorphism::identity(f3)));
  EXPECT_TRUE(is_torelli(partial_conjugation(f3, f3.index("a"), vs(f3, {"c"}))));
  EXPECT_FALSE(is_torelli(transvection(f3, f3.index("a"), f3.index("b"))));

  for (const auto& gen : torelli_generators(f3)) EXPECT_EQ(gen.kind, GeneratorKind::PartialConjugation);
  for (const auto& gen : torelli_generators(fixture("F4"))) EXPECT_EQ(gen.kind, GeneratorKind::PartialConjugation);

  const auto g = graph({"u", "v", "w"}, {});
  const auto gens = torelli_generators(g);
  const auto it = std::find_if(gens.begin(), gens.end(), [](const Generator& x) {
    return x.kind == GeneratorKind::CommutatorTransvection && x.target == 0 && x.multiplier == 1 && x.second == 2;
  });
  ASSERT_NE(it, gens.end());
  EXPECT_TRUE(is_torelli(it->aut));
  EXPECT_FALSE(it->aut.is_identity());
}

TEST(OrientationCharacter, Examples) {
  const auto g = graph({"u", "v:5"}, {});
  EXPECT_TRUE(orientation_character(g, {make_transvection(g, 0, 0 + 1)}).trivial());
  const auto inv = orientation_character(g, {make_factor(g, 0, -1)});
  ASSERT_EQ(inv.signs.size(), 1u);
  EXPECT_EQ(inv.signs[0].second, -1);
  const auto sq = orientation_character(g, {make_factor(g, 1, 2)});
  EXPECT_FALSE(sq.trivial());
  EXPECT_EQ(sq.torsion_block, (IntMatrix{{2}}));
  const auto f4 = fixture("F4");
  EXPECT_THROW(orientation_character(f4, {make_graph_symmetry(f4, {1, 0, 2})}), Error);
}

TEST(SpecialLinear, Examples) {
  const auto f1 = fixture("F1");
  const auto blocks = special_linear_blocks(f1, {make_transvection(f1, 0, 1)});
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(blocks[0], (IntMatrix{{1, 1}, {0, 1}}));
  const auto pc = special_linear_blocks(f1, {make_partial_conjugation(f1, 0, VertexSet{1})});
  EXPECT_EQ(pc[0], identity_matrix(2));
  EXPECT_TRUE(special_linear_blocks(fixture("F5"), {}).empty());
  EXPECT_TRUE(special_linear_block_sizes(fixture("F5")).empty());
  EXPECT_EQ(special_linear_block_sizes(f1), std::vector<int>{2});
  EXPECT_THROW(special_linear_blocks(f1, {make_factor(f1, 0, -1)}), Error);

  for (const auto& gen : sl_kernel_generators(f1))
    EXPECT_FALSE(gen.kind == GeneratorKind::Transvection && gen.target == 0 && gen.multiplier == 1);
}

TEST(FiniteIndexGenerators, Examples) {
  const auto f5 = fixture("F5");
  const auto gens = finite_index_generators(f5);
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0].family, FiniteIndexFamily::PartialConjugation);
  EXPECT_EQ(gens[0].gen.multiplier, f5.index("c"));
  EXPECT_EQ(gens[0].gen.support, vs(f5, {"a"}));
  EXPECT_EQ(gens[1].family, FiniteIndexFamily::Transvection);
  EXPECT_EQ(gens[1].gen.target, f5.index("c"));
  EXPECT_EQ(gens[1].gen.multiplier, f5.index("b"));

  const auto f4 = fixture("F4");
  const auto g4 = finite_index_generators(f4);
  EXPECT_FALSE(g4.empty());
  for (const auto& x : g4) EXPECT_EQ(x.family, FiniteIndexFamily::CommutatorPartialConjugation);
}

TEST(DepthFiltration, NestedAndGradedByDepth) {
  const auto f5 = fixture("F5");
  const auto s = depth_filtration(f5);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].size(), 2u);
  for (const auto& g : random_graphs(80, 6, 81)) {
    const auto f = depth_filtration(g);
    for (size_t i = 1; i < f.size(); ++i) {
      EXPECT_LE(f[i].size(), f[i - 1].size());
      for (const auto& x : f[i])
        EXPECT_TRUE(std::any_of(f[i - 1].begin(), f[i - 1].end(), [&](const Generator& y) { return y.name == x.name; }));
    }
  }
}

TEST(AbelianProperties, RhoIsFunctorial) {
  SplitMix64 rng(83);
  int pairs = 0;
  for (const auto& g : random_graphs(100, 6, 83)) {
    const auto gens = assorted_generators(g);
    if (gens.empty()) continue;
    const auto a = abelianized_group(g);
    for (int i = 0; i < 5; ++i, ++pairs) {
      const auto& x = gens[rng.below(gens.size())].aut;
      const auto& y = gens[rng.below(gens.size())].aut;
      EXPECT_EQ(abelian_action(a, compose(x, y)), compose(abelian_action(a, x), abelian_action(a, y)));
    }
  }
  EXPECT_GE(pairs, 400);
}

TEST(AbelianProperties, TorelliAndKernelGenerators) {
  for (const auto& g : random_graphs(100, 6, 87)) {
    bool all_finite = true;
    for (int v = 0; v < g.size(); ++v) all_finite = all_finite && g.order(v).is_finite();
    for (const auto& x : torelli_generators(g)) {
      EXPECT_TRUE(is_torelli(x.aut));
      if (all_finite) EXPECT_NE(x.kind, GeneratorKind::CommutatorTransvection);
    }
    for (const auto& x : sl_kernel_generators(g))
      for (const auto& b : special_linear_blocks(g, {x})) EXPECT_EQ(b, identity_matrix(b.size()));
    for (const auto& x : aut_one_inf_generators(g)) {
      EXPECT_TRUE(orientation_character(g, {x}).trivial()) << x.name;
      for (const auto& b : special_linear_blocks(g, {x})) EXPECT_EQ(determinant(b), 1);
    }
  }
}

TEST(AbelianProperties, StandardRepresentationRelators) {
  for (const auto& g : random_graphs(100, 6, 89)) {
    const auto d = equivalence_classes(g);
    for (int u = 0; u < g.size(); ++u)
      for (int v = 0; v < g.size(); ++v) {
        if (u == v || !dominates(g, u, v)) continue;
        const auto r = transvection(g, u, v);
        if (g.order(v).is_finite()) EXPECT_TRUE(abelian_action(power(r, g.order(v).value())).is_identity());
        if (d.equivalent(u, v) && g.order(u).is_infinite() && !g.adjacent(u, v)) {
          const auto s = transvection_by(g, v, GroupElement::generator(g, u, -1));
          EXPECT_TRUE(abelian_action(power(compose(compose(r, s), r), 4)).is_identity());
        }
      }
  }
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant({}), 1);
  EXPECT_EQ(determinant({{2, 1}, {1, 1}}), 1);
  EXPECT_EQ(determinant({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), -1);
  EXPECT_EQ(determinant({{2, 4}, {1, 2}}), 0);
}
