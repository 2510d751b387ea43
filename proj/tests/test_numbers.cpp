#include <gtest/gtest.h>

#include "oracle.hpp"
#include "pebbling/corpus.hpp"
#include "pebbling/families.hpp"
#include "pebbling/numbers.hpp"
#include "pebbling/products.hpp"

using namespace pebbling;

namespace {

std::vector<Graph> connected_up_to(std::uint32_t n) {
  CorpusSpec s;
  s.min_vertices = 1;
  s.max_vertices = n;
  std::vector<Graph> out;
  for (auto& g : generate_corpus(s)) out.push_back(g.graph);
  return out;
}

}  // namespace

TEST(Numbers, KnownFamilies) {
  for (std::uint32_t n = 1; n <= 6; ++n) EXPECT_EQ(pebbling_number(complete_graph(n)).value, n);
  for (std::uint32_t n = 1; n <= 7; ++n) EXPECT_EQ(pebbling_number(path_graph(n)).value, 1u << (n - 1));
  EXPECT_EQ(pebbling_number(cycle_graph(4)).value, 4u);
  EXPECT_EQ(pebbling_number(cycle_graph(5)).value, 5u);
  EXPECT_EQ(pebbling_number(cycle_graph(6)).value, 8u);
  EXPECT_EQ(pebbling_number(cycle_graph(7)).value, 11u);
  EXPECT_EQ(pebbling_number(star_graph(4)).value, 6u);  // m + 2 for stars with m >= 2 leaves
  EXPECT_EQ(pebbling_number(petersen_graph()).value, 10u);
  EXPECT_EQ(pebbling_number(hypercube_graph(3)).value, 8u);
}

TEST(Numbers, MatchesBruteForceOnAllSmallConnectedGraphs) {
  for (const Graph& g : connected_up_to(5)) {
    const auto r = pebbling_number(g);
    EXPECT_EQ(r.value, oracle::number(g)) << to_graph6(g);
    ASSERT_EQ(r.witness_unsolvable.size() + 1, r.value);
    EXPECT_FALSE(oracle::reachable(g, r.witness_unsolvable.counts(), r.root_attaining_max, 1));
    if (g.order() <= 4) {
      EXPECT_EQ(pebbling_number(g, 2).value, oracle::number(g, 2)) << to_graph6(g);
    }
  }
}

TEST(Numbers, RootedValues) {
  const Graph p4 = path_graph(4);
  EXPECT_EQ(rooted_pebbling_number(p4, 0).value, 8u);
  EXPECT_EQ(rooted_pebbling_number(p4, 1).value, 5u);  // parts 2 and 1: 4 + 2 - 2 + 1
  EXPECT_EQ(rooted_pebbling_number(star_graph(3), 0).value, 4u);
  EXPECT_EQ(rooted_pebbling_number(star_graph(3), 1).value, 5u);
  EXPECT_THROW(rooted_pebbling_number(p4, 4), InputError);
  EXPECT_THROW(rooted_pebbling_number(build_graph(3, {{0, 1}}), 0), DisconnectedError);
}

TEST(Numbers, FoldedValues) {
  for (Count k = 1; k <= 4; ++k) {
    EXPECT_EQ(pebbling_number(build_graph(1, {}), k).value, k);
    EXPECT_EQ(pebbling_number(complete_graph(2), k).value, 2 * k);
    EXPECT_EQ(pebbling_number(path_graph(4), k).value, 8 * k);
  }
  for (std::uint32_t n = 3; n <= 5; ++n)
    for (Count k = 1; k <= 3; ++k) EXPECT_EQ(pebbling_number(complete_graph(n), k).value, 2 * k + n - 2);
  EXPECT_THROW(pebbling_number(path_graph(3), 0), InputError);
}

TEST(Numbers, OrbitsAndThreadsDoNotChangeResults) {
  for (const Graph& g : {cycle_graph(6), petersen_graph(), sun_graph(3), star_graph(4)}) {
    NumberOptions plain;
    plain.use_orbits = false;
    NumberOptions fast;
    fast.threads = 3;
    const auto a = pebbling_number(g, 1, plain), b = pebbling_number(g, 1, fast);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.root_attaining_max, b.root_attaining_max);
    EXPECT_EQ(phi(g, plain).value, phi(g, fast).value);
  }
}

TEST(Numbers, BudgetReportsBounds) {
  NumberOptions tight;
  tight.budget = 50;
  try {
    pebbling_number(cycle_graph(8), 1, tight);
    FAIL() << "expected budget exhaustion";
  } catch (const BudgetExceeded& e) {
    EXPECT_LE(e.lower(), 16u);
    EXPECT_GE(e.upper(), 16u);
  }
}

TEST(Numbers, ConfigurationCap) {
  NumberOptions small;
  small.config_cap = 20;
  EXPECT_THROW(pebbling_number(path_graph(7), 1, small), CapExceeded);
}

TEST(Phi, KnownValues) {
  EXPECT_EQ(phi(cycle_graph(5)).value, 3u);
  for (std::uint32_t n = 2; n <= 6; ++n) EXPECT_EQ(phi(complete_graph(n)).value, 1u);
  EXPECT_EQ(phi(petersen_graph()).value, 3u);
  EXPECT_EQ(phi(build_graph(1, {})).value, 1u);
  EXPECT_EQ(phi(path_graph(5)).value, 8u);
}

TEST(Phi, MatchesBruteForceOnSmallGraphs) {
  for (const Graph& g : connected_up_to(4)) {
    const auto r = phi(g);
    EXPECT_EQ(r.value, oracle::number(g, 1, true)) << to_graph6(g);
    EXPECT_FALSE(oracle::free_reachable(g, r.witness_unsolvable.counts(), r.root_attaining_max));
  }
}

TEST(Trees, FormulaMatchesSolverOnAllTreesAllRoots) {
  NumberOptions raw;
  raw.use_tree_cap = false;  // the cap would otherwise come from the formula under test
  for (std::uint32_t n = 1; n <= 7; ++n)
    for (const Graph& t : all_trees(n))
      for (Vertex r = 0; r < n; ++r) {
        const auto formula = tree_pebbling_number(t, r);
        EXPECT_EQ(formula.value, rooted_pebbling_number(t, r, 1, raw).value) << to_graph6(t) << " r=" << r;
        EXPECT_EQ(formula.partition.edge_total(), n - 1);
      }
}

TEST(Trees, PartitionExamples) {
  // Spider with legs 2 and 1 rooted at its center is P4 rooted at an inner vertex.
  const Graph spider = build_graph(4, {{0, 1}, {1, 2}, {0, 3}});
  auto t = tree_pebbling_number(spider, 0);
  EXPECT_EQ(t.partition.exponents, (std::vector<std::uint32_t>{2, 1}));
  EXPECT_EQ(t.value, 5u);
  EXPECT_EQ(tree_pebbling_number(spider, 2).value, 8u);
  auto star = tree_pebbling_number(star_graph(3), 0);
  EXPECT_EQ(star.partition.exponents, (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(star.value, 4u);
  EXPECT_THROW(tree_pebbling_number(cycle_graph(4), 0), InputError);
}

TEST(Fact1, SandwichOnSmallGraphs) {
  for (const Graph& g : connected_up_to(5)) {
    const auto pi = pebbling_number(g).value;
    EXPECT_GE(pi, g.order());
    EXPECT_GE(pi, 1u << diameter(g));
    EXPECT_LE(pi, 1u << (g.order() - 1));
  }
}

TEST(Class0, CompleteAndPetersen) {
  EXPECT_TRUE(is_class0(complete_graph(5)));
  EXPECT_TRUE(is_class0(petersen_graph()));
  EXPECT_TRUE(is_class0(cycle_graph(5)));
  EXPECT_FALSE(is_class0(path_graph(3)));
  EXPECT_FALSE(is_class0(cycle_graph(6)));
}

TEST(Frugality, CompleteAndDiameterTwo) {
  for (const Graph& g : {complete_graph(3), complete_graph(4), cycle_graph(5)}) {
    auto rep = is_frugal_up_to(g, 3);
    EXPECT_TRUE(rep.frugal_up_to());
    ASSERT_EQ(rep.rows.size(), 2u);
    EXPECT_EQ(rep.rows[0].fold, 2u);
  }
  auto p3 = is_frugal_up_to(path_graph(3), 3);
  EXPECT_EQ(p3.rows[1].pi_k, 12u);
  EXPECT_EQ(p3.rows[1].bound, 4u + 2 * 4);
  EXPECT_THROW(is_frugal_up_to(complete_graph(3), 1), InputError);
}

TEST(Frugality, BudgetMarksIncomplete) {
  NumberOptions tight;
  tight.budget = 200;
  auto rep = is_frugal_up_to(cycle_graph(6), 4, tight);
  EXPECT_FALSE(rep.complete);
  EXPECT_FALSE(rep.frugal_up_to());
}
