#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "pebbling/configuration.hpp"
#include "pebbling/error.hpp"

namespace pebbling {

/// Search space for a largest unsolvable configuration.
struct MaxUnsolvableProblem {
  std::uint32_t order = 0;
  /// Vertices allowed to hold pebbles, farthest from the root first.
  std::vector<Vertex> vertices;
  /// Per vertex (by index): the most pebbles any unsolvable configuration can hold there.
  std::vector<Count> vertex_cap;
  /// No unsolvable configuration has more pebbles than this.
  std::uint64_t size_cap = 0;
  std::uint64_t budget = 100'000'000;
};

struct MaxUnsolvableResult {
  std::uint64_t size = 0;
  Configuration witness;
  std::uint64_t nodes = 0;
};

/// Largest configuration on which `solvable` is false, given that unsolvable
/// configurations form a downset (removing a pebble keeps them unsolvable).
///
/// Russian-doll branch and bound: suffixes of the vertex order are solved from the
/// shortest up, and the optimum over suffix j bounds whatever positions j.. can
/// still contribute, since that part of any unsolvable configuration is itself
/// unsolvable. Counts are assigned high to low; the largest feasible count at a
/// vertex is found by bisection, after which every smaller count is known unsolvable
/// without another query.
///
/// `solvable` is called with a full-length count vector. `external_nodes` reports
/// work done inside the predicate so the budget covers both.
template <class Solvable, class ExternalNodes>
MaxUnsolvableResult find_max_unsolvable(const MaxUnsolvableProblem& p, Solvable&& solvable,
                                        ExternalNodes&& external_nodes) {
  const std::size_t m = p.vertices.size();
  std::vector<std::uint64_t> doll(m + 1, 0);
  std::vector<Count> partial(p.order, 0);
  std::vector<Count> best_cfg(p.order, 0);
  std::uint64_t best = 0;
  std::uint64_t nodes = 0;

  auto over_budget = [&] {
    if (nodes + external_nodes() > p.budget)
      throw BudgetExceeded(best + 1, p.size_cap + 1);
  };
  auto query = [&](const std::vector<Count>& c) {
    try {
      return solvable(c);
    } catch (const BudgetExceeded&) {
      throw BudgetExceeded(best + 1, p.size_cap + 1);
    }
  };

  auto dfs = [&](auto& self, std::size_t j, std::uint64_t total) -> void {
    ++nodes;
    if ((nodes & 1023) == 0) over_budget();
    if (total > best) {
      best = total;
      best_cfg = partial;
    }
    if (j == m) return;
    const Vertex v = p.vertices[j];
    std::uint64_t hi = std::min<std::uint64_t>(p.vertex_cap[v], p.size_cap - std::min(total, p.size_cap));
    if (total + hi + doll[j + 1] <= best) return;
    // Largest c in [0, hi] keeping the partial configuration unsolvable.
    std::uint64_t lo = 0;
    while (lo < hi) {
      const std::uint64_t mid = lo + (hi - lo + 1) / 2;
      partial[v] = static_cast<Count>(mid);
      if (query(partial)) hi = mid - 1;
      else lo = mid;
    }
    partial[v] = 0;
    for (std::uint64_t c = lo + 1; c-- > 0;) {
      if (total + c + doll[j + 1] <= best) break;
      partial[v] = static_cast<Count>(c);
      self(self, j + 1, total + c);
    }
    partial[v] = 0;
  };

  for (std::size_t i = m; i-- > 0;) {
    best = doll[i + 1];
    dfs(dfs, i, 0);
    doll[i] = best;
  }

  MaxUnsolvableResult out;
  out.size = doll[0];
  out.witness = Configuration(best_cfg);
  out.nodes = nodes;
  if (out.witness.size() != out.size) throw InternalError("max-unsolvable witness size mismatch");
  return out;
}

}  // namespace pebbling
