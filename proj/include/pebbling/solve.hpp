#pragma once

#include <functional>

#include "pebbling/free_move.hpp"
#include "pebbling/solver.hpp"

namespace pebbling {

/// One-shot decision for a query; builds a fresh solver.
inline SolveOutcome is_solvable(const SolveQuery& q, const Configuration& c, SolverOptions opts = {}) {
  require_connected(q.graph);
  if (q.root >= q.graph.order()) throw InputError("root " + std::to_string(q.root) + " out of range");
  if (c.order() != q.graph.order()) throw InputError("configuration length does not match graph");
  if (q.fold < 1) throw InputError("fold must be >= 1");
  if (q.variant == Variant::FreeMove) {
    if (q.fold != 1) throw InputError("the free-move variant is defined for fold 1 only");
    return FreeMoveSolver(q.graph, q.root, opts).solve(c);
  }
  return Solver(q.graph, q.root, q.fold, opts).solve(c);
}

inline SolveOutcome is_free_move_solvable(const Graph& g, const Configuration& c, Vertex root,
                                          SolverOptions opts = {}) {
  return is_solvable({g, root, 1, Variant::FreeMove}, c, opts);
}

inline constexpr std::uint32_t kOracleMaxOrder = 8;
inline constexpr std::uint64_t kOracleMaxPebbles = 16;

/// Reference decision by plain recursion over every move sequence: no table, no
/// filters. Only for cross-checking the Solver on small instances.
inline bool naive_oracle_is_solvable(const Graph& g, const Configuration& c, Vertex root, Count fold) {
  if (g.order() > kOracleMaxOrder || c.size() > kOracleMaxPebbles)
    throw CapExceeded("naive oracle is limited to n <= 8 and |C| <= 16");
  if (root >= g.order() || c.order() != g.order()) throw InputError("naive oracle: bad root or configuration");
  std::vector<Count> cur = c.counts();
  std::function<bool()> rec = [&]() -> bool {
    if (cur[root] >= fold) return true;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (cur[v] < 2) continue;
      for (Vertex w : g.neighbors(v)) {
        cur[v] -= 2;
        cur[w] += 1;
        const bool ok = rec();
        cur[v] += 2;
        cur[w] -= 1;
        if (ok) return true;
      }
    }
    return false;
  };
  return rec();
}

}  // namespace pebbling
