#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "pebbling/families.hpp"
#include "pebbling/graph_io.hpp"
#include "pebbling/products.hpp"
#include "pebbling/solve.hpp"

using namespace pebbling;

namespace {

std::vector<Graph> small_graphs() {
  return {path_graph(4), cycle_graph(5), complete_graph(4), star_graph(3), corona(complete_graph(2), complete_graph(2)),
          build_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}})};
}

}  // namespace

TEST(Solver, TrivialCases) {
  const Graph p3 = path_graph(3);
  EXPECT_TRUE(is_solvable({p3, 2}, parse_configuration("0:4", 3)).solvable);
  EXPECT_FALSE(is_solvable({p3, 2}, parse_configuration("0:3", 3)).solvable);
  EXPECT_TRUE(is_solvable({cycle_graph(5), 0}, parse_configuration("1:2 3:2", 5)).solvable);
  EXPECT_TRUE(is_solvable({p3, 1}, parse_configuration("1:1", 3)).solvable);
  EXPECT_FALSE(is_solvable({p3, 1}, Configuration(3)).solvable);
  EXPECT_TRUE(is_solvable({build_graph(1, {}), 0, 2}, parse_configuration("0:2", 1)).solvable);
  EXPECT_FALSE(is_solvable({build_graph(1, {}), 0, 2}, parse_configuration("0:1", 1)).solvable);
}

TEST(Solver, InputErrors) {
  const Graph p3 = path_graph(3);
  EXPECT_THROW(is_solvable({p3, 3}, Configuration(3)), InputError);
  EXPECT_THROW(is_solvable({p3, 0}, Configuration(2)), InputError);
  EXPECT_THROW(is_solvable({p3, 0, 0}, Configuration(3)), InputError);
  EXPECT_THROW(is_solvable({build_graph(2, {}), 0}, Configuration(2)), DisconnectedError);
  EXPECT_THROW(is_solvable({p3, 0, 2, Variant::FreeMove}, Configuration(3)), InputError);
  SolverOptions tight;
  tight.config_cap = 5;
  EXPECT_THROW(is_solvable({p3, 0}, parse_configuration("2:6", 3), tight), CapExceeded);
  EXPECT_THROW(parse_configuration("0:1 x", 3), InputError);
  EXPECT_THROW(parse_configuration("3:1", 3), InputError);
  EXPECT_THROW(parse_configuration("1:", 3), InputError);
  EXPECT_THROW(parse_configuration(":1", 3), InputError);
  EXPECT_EQ(parse_configuration("0:1 0:2", 3)[0], 3u);
}

TEST(Solver, BudgetExceeded) {
  SolverOptions tiny;
  tiny.budget = 3;
  Solver s(path_graph(8), 0, 1, tiny);
  std::vector<Count> c{0, 1, 1, 1, 1, 1, 1, 20};
  EXPECT_THROW(s.solvable(c), BudgetExceeded);
}

// Exhaustive agreement with the plain recursive oracle and the independent
// breadth-first oracle on every configuration of size <= 5.
TEST(Solver, AgreesWithOraclesExhaustively) {
  for (const Graph& g : small_graphs())
    for (Vertex r = 0; r < g.order(); ++r)
      for (Count k = 1; k <= 2; ++k) {
        Solver solver(g, r, k, {4096, 100'000'000, false});
        for (std::uint32_t total = 0; total <= 5; ++total)
          oracle::for_each_config(g.order(), total, [&](const oracle::Counts& c) {
            const bool expected = oracle::reachable(g, c, r, k);
            ASSERT_EQ(solver.solvable(c), expected) << to_graph6(g) << " r=" << r << " k=" << k;
            ASSERT_EQ(naive_oracle_is_solvable(g, Configuration(c), r, k), expected);
          });
      }
}

TEST(Solver, WitnessesReplayToTarget) {
  std::mt19937 rng(3);
  for (const Graph& g : small_graphs())
    for (Vertex r = 0; r < g.order(); ++r)
      for (Count k = 1; k <= 3; ++k) {
        for (int trial = 0; trial < 40; ++trial) {
          std::vector<Count> c(g.order());
          for (auto& x : c) x = rng() % 5;
          SolverOptions o;
          o.witness = true;
          auto res = is_solvable({g, r, k}, Configuration(c), o);
          ASSERT_EQ(res.solvable, oracle::reachable(g, c, r, k));
          if (!res.solvable) continue;
          ASSERT_TRUE(res.witness.has_value());
          auto end = replay(g, Configuration(c), *res.witness);
          EXPECT_GE(end[r], k);
        }
      }
}

TEST(Solver, MonotoneUnderAddingPebbles) {
  std::mt19937 rng(5);
  for (const Graph& g : small_graphs()) {
    Solver s(g, 0, 2, {4096, 100'000'000, false});
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Count> c(g.order());
      for (auto& x : c) x = rng() % 4;
      if (!s.solvable(c)) continue;
      for (Vertex v = 0; v < g.order(); ++v) {
        auto d = c;
        ++d[v];
        EXPECT_TRUE(s.solvable(d));
      }
    }
  }
}

// The weight never increases along a move, so weight below the fold is unsolvable.
TEST(Solver, WeightFilterIsSound) {
  std::mt19937 rng(9);
  for (const Graph& g : small_graphs())
    for (Vertex r = 0; r < g.order(); ++r) {
      Solver s(g, r, 2, {4096, 100'000'000, false});
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<Count> c(g.order());
        for (auto& x : c) x = rng() % 6;
        if (s.weight_of(c) < s.weight_threshold()) {
          EXPECT_FALSE(oracle::reachable(g, c, r, 2));
        }
        for (Vertex u = 0; u < g.order(); ++u) {
          if (c[u] < 2) continue;
          for (Vertex w : g.neighbors(u)) {
            auto d = c;
            d[u] -= 2;
            d[w] += 1;
            EXPECT_LE(s.weight_of(d), s.weight_of(c));
          }
        }
      }
    }
}

TEST(Solver, PersistentTableSharesWork) {
  Solver s(cycle_graph(7), 0, 1, {4096, 100'000'000, false});
  std::vector<Count> c{0, 0, 0, 5, 5, 0, 0};
  s.solvable(c);
  const auto after_first = s.stats().nodes_expanded;
  s.solvable(c);
  EXPECT_EQ(s.stats().nodes_expanded, after_first);
  EXPECT_GT(s.table_size(), 0u);
}

TEST(Solver, LargeCountsEncodeDistinctly) {
  // Counts straddling the one-byte escape must not collide in the table.
  const Graph p = path_graph(9);
  Solver s(p, 0, 1, {4096, 100'000'000, false});
  std::vector<Count> a(9, 0), b(9, 0);
  a[8] = 255;  // 2^8 = 256 needed
  b[8] = 256;
  EXPECT_FALSE(s.solvable(a));
  EXPECT_TRUE(s.solvable(b));
  EXPECT_FALSE(s.solvable(a));
}

TEST(FreeMove, AgreesWithOracle) {
  for (const Graph& g : small_graphs())
    for (Vertex r = 0; r < g.order(); ++r) {
      FreeMoveSolver s(g, r, {4096, 100'000'000, false});
      for (std::uint32_t total = 0; total <= 4; ++total)
        oracle::for_each_config(g.order(), total, [&](const oracle::Counts& c) {
          ASSERT_EQ(s.solvable(c), oracle::free_reachable(g, c, r)) << to_graph6(g) << " r=" << r;
        });
    }
}

TEST(FreeMove, WitnessesAreLegal) {
  const Graph c5 = cycle_graph(5);
  SolverOptions o;
  o.witness = true;
  for (const char* text : {"2:1 3:1 1:1", "2:2 3:1", "1:1", "2:4"}) {
    const Configuration start = parse_configuration(text, 5);
    auto res = is_free_move_solvable(c5, start, 0, o);
    ASSERT_TRUE(res.solvable) << text;
    ASSERT_TRUE(res.witness);
    EXPECT_GE(replay(c5, start, *res.witness)[0], 1u) << text;
  }
  EXPECT_FALSE(is_free_move_solvable(c5, parse_configuration("2:1 3:1", 5), 0).solvable);
}

TEST(Replay, RejectsIllegalSequences) {
  const Graph p3 = path_graph(3);
  const Configuration c = parse_configuration("0:3", 3);
  EXPECT_THROW(replay(p3, c, {{0, 2, MoveKind::Paid}}), InputError);
  EXPECT_THROW(replay(p3, parse_configuration("0:1", 3), {{0, 1, MoveKind::Paid}}), InputError);
  EXPECT_THROW(replay(p3, c, {{0, 1, MoveKind::Paid}, {0, 1, MoveKind::Free}}), InputError);
  EXPECT_THROW(replay(p3, parse_configuration("0:1 1:1", 3), {{0, 1, MoveKind::Free}, {1, 2, MoveKind::Free},
                                                              {1, 2, MoveKind::Free}}),
               InputError);
  // A pebble that arrived by a free move cannot move freely again.
  EXPECT_THROW(replay(p3, c, {{0, 1, MoveKind::Free}, {1, 2, MoveKind::Free}}), InputError);
  EXPECT_EQ(replay(p3, parse_configuration("0:1 1:1", 3), {{0, 1, MoveKind::Free}, {1, 2, MoveKind::Free}})[2], 1u);
}

TEST(NaiveOracle, Caps) {
  EXPECT_THROW(naive_oracle_is_solvable(path_graph(9), Configuration(9), 0, 1), CapExceeded);
  Configuration big(3);
  big[0] = 17;
  EXPECT_THROW(naive_oracle_is_solvable(path_graph(3), big, 2, 1), CapExceeded);
}
