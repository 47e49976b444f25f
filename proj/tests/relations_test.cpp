#include <gtest/gtest.h>

#include <map>

#include "fixtures.hpp"
#include "gpab/autos.hpp"
#include "gpab/random.hpp"
#include "gpab/relations.hpp"

using namespace gpab;
using gpab::testing::elem;
using gpab::testing::fixture;
using gpab::testing::graph;
using gpab::testing::vs;

namespace {

int instances(const RelationReport& r, const std::string& family) {
  for (const auto& s : r.summary())
    if (s.family == family) return s.passed + s.failed + s.not_found;
  return -1;
}

}  // namespace

TEST(Relators, CompositionOfTransvectionsDirect) {
  // z ≤ y ≤ x in a free group: R_y^x R_z^y = R_z^y R_z^x R_y^x.
  const auto g = graph({"x", "y", "z"}, {});
  const int x = 0, y = 1, z = 2;
  const auto lhs = compose(transvection(g, y, x), transvection(g, z, y));
  const auto rhs = compose(compose(transvection(g, z, y), transvection(g, z, x)), transvection(g, y, x));
  EXPECT_TRUE(equal_in_aut(lhs, rhs));
  EXPECT_GE(instances(verify_relation_catalog(g), "transvection chain"), 1);
}

TEST(Relators, TorelliLiftDirect) {
  // [u,v] ≠ 1: (R_u^v R_v^{u^-1} R_u^v)^4 = π^u_{v} π^v_{u} π^{u^-1}_{v} π^{v^-1}_{u}.
  const auto g = fixture("F1");
  const int u = 0, v = 1;
  const auto u1 = elem(g, "u"), v1 = elem(g, "v");
  const auto r = compose(compose(transvection(g, u, v), transvection_by(g, v, u1.inverse())), transvection(g, u, v));
  const auto lhs = power(r, 4);
  const auto rhs = compose(compose(conjugation_on(g, VertexSet{v}, u1), conjugation_on(g, VertexSet{u}, v1)),
                           compose(conjugation_on(g, VertexSet{v}, u1.inverse()),
                                   conjugation_on(g, VertexSet{u}, v1.inverse())));
  EXPECT_TRUE(equal_in_aut(lhs, rhs));
}

TEST(Catalog, FamiliesAreListedInOrder) {
  const auto& fams = relation_families();
  ASSERT_FALSE(fams.empty());
  EXPECT_EQ(fams.front(), "transvection chain");
  const auto summary = verify_relation_catalog(fixture("F1")).summary();
  ASSERT_EQ(summary.size(), fams.size());
  for (size_t i = 0; i < fams.size(); ++i) EXPECT_EQ(summary[i].family, fams[i]);
}

TEST(Catalog, PartialConjugationConjugateOnIsolatedTriple) {
  // Configurations with v = x and y ∉ C on four isolated free vertices.
  const auto g = graph({"x", "y", "z", "w"}, {});
  const auto r = verify_relation_catalog(g);
  EXPECT_TRUE(r.all_passed());
  EXPECT_GE(instances(r, "pc by transvection, v=x, y not in C"), 1);
}

TEST(Catalog, HoldsOnFixturesAndRandomGraphs) {
  std::map<std::string, int> seen;
  std::vector<LabeledGraph> graphs;
  for (const auto& [n, g] : gpab::testing::all_fixtures()) graphs.push_back(g);
  for (int i = 0; i < 100; ++i) graphs.push_back(seeded_graph(2024, i, 7, 0.4, gpab::testing::mixed_orders()));
  for (const auto& g : gpab::testing::catalog_coverage_graphs()) graphs.push_back(g);
  for (const auto& g : graphs) {
    const auto r = verify_relation_catalog(g);
    for (const auto& c : r.checks) {
      EXPECT_EQ(c.outcome, CheckOutcome::Pass) << c.family << " " << c.configuration << " on " << serialize_graph(g);
      ++seen[c.family];
    }
  }
  // Every family is exercised by some configuration.
  for (const auto& f : relation_families()) EXPECT_GT(seen[f], 0) << f;
}

TEST(Catalog, CorruptHookFailsTheReport) {
  CatalogOptions opt;
  opt.corrupt_first = true;
  const auto r = verify_relation_catalog(fixture("F3"), opt);
  EXPECT_FALSE(r.all_passed());
  ASSERT_FALSE(r.checks.empty());
  EXPECT_EQ(r.checks.front().outcome, CheckOutcome::Fail);
}

TEST(Catalog, ZeroBoundLeavesOutLevelChecksUndecided) {
  // On the path x–a–y–b, C = {y, b} contains y and the commutator [R_x^y, π^x_C] is inner but not trivial.
  const auto g = graph({"x", "a", "y", "b"}, {"x-a", "a-y", "y-b"});
  CatalogOptions opt;
  opt.bound = 0;
  const auto r = verify_relation_catalog(g, opt);
  bool undecided = false;
  for (const auto& c : r.checks) undecided = undecided || c.outcome == CheckOutcome::NotFoundUpTo;
  EXPECT_TRUE(undecided);
  EXPECT_FALSE(r.all_passed());
  EXPECT_TRUE(verify_relation_catalog(g).all_passed());
}
