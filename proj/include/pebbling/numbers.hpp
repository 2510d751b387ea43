#pragma once

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pebbling/canonical.hpp"
#include "pebbling/free_move.hpp"
#include "pebbling/parallel.hpp"
#include "pebbling/search.hpp"
#include "pebbling/solver.hpp"
#include "pebbling/tree.hpp"

namespace pebbling {

enum class NumberKind { Pi, PiK, Phi };

inline std::string to_string(NumberKind k, Count fold) {
  switch (k) {
    case NumberKind::Pi: return "pi";
    case NumberKind::PiK: return "pi_" + std::to_string(fold);
    case NumberKind::Phi: return "phi";
  }
  return "?";
}

struct PebblingResult {
  std::uint64_t value = 0;
  NumberKind kind = NumberKind::Pi;
  Count fold = 1;
  Vertex root_attaining_max = 0;
  /// Unsolvable for root_attaining_max, of size value - 1.
  Configuration witness_unsolvable;
  SolveStats stats;
};

struct NumberOptions {
  /// Node expansions per rooted computation (search plus solver).
  std::uint64_t budget = 100'000'000;
  /// Workers for root evaluations; 0 means hardware concurrency.
  unsigned threads = 1;
  /// Cap the search by k times the rooted pebbling number of a BFS spanning tree.
  bool use_tree_cap = true;
  /// Evaluate one root per automorphism orbit.
  bool use_orbits = true;
  std::uint64_t config_cap = 4096;
};

namespace detail {

inline std::vector<Vertex> by_decreasing_distance(const std::vector<std::uint32_t>& dist) {
  std::vector<Vertex> order(dist.size());
  for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return dist[a] > dist[b]; });
  return order;
}

inline void confirm_unsolvable(const Graph& g, Vertex root, Count fold, Variant variant, const Configuration& w,
                               const NumberOptions& opts) {
  SolverOptions so{opts.config_cap, opts.budget, false};
  const bool solvable = variant == Variant::Standard ? Solver(g, root, fold, so).solvable(w.counts())
                                                     : FreeMoveSolver(g, root, so).solvable(w.counts());
  if (solvable) throw InternalError("witness " + w.to_string() + " re-checked as solvable");
}

}  // namespace detail

/// Exact π_k(G, root): one more than the largest k-fold unsolvable configuration.
/// Root pebbles are part of the search (at most k-1 of them), so K₁ and k > 1 come out right.
inline PebblingResult rooted_pebbling_number(const Graph& g, Vertex root, Count fold = 1, NumberOptions opts = {}) {
  require_connected(g);
  if (root >= g.order()) throw InputError("root out of range");
  if (fold < 1) throw InputError("fold must be >= 1");
  Solver solver(g, root, fold, {opts.config_cap, opts.budget, false});
  const auto& dist = solver.distances();

  MaxUnsolvableProblem p;
  p.order = g.order();
  p.budget = opts.budget;
  p.vertex_cap.resize(g.order());
  std::uint64_t cap_sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::uint64_t c = (static_cast<std::uint64_t>(fold) << dist[v]) - 1;
    p.vertex_cap[v] = static_cast<Count>(std::min<std::uint64_t>(c, opts.config_cap));
    cap_sum += p.vertex_cap[v];
  }
  for (Vertex v : detail::by_decreasing_distance(dist))
    if (p.vertex_cap[v] > 0) p.vertices.push_back(v);
  p.size_cap = cap_sum;
  if (opts.use_tree_cap) {
    // π_k(G,r) <= k π(T,r) for a spanning tree T.
    const auto tree = tree_pebbling_number(bfs_spanning_tree(g, root), root);
    p.size_cap = std::min<std::uint64_t>(p.size_cap, fold * tree.value - 1);
  }
  if (p.size_cap >= opts.config_cap) throw CapExceeded("pebbling search would exceed the configuration cap");

  auto res = find_max_unsolvable(
      p, [&](const std::vector<Count>& c) { return solver.solvable(c); },
      [&] { return solver.stats().nodes_expanded; });
  detail::confirm_unsolvable(g, root, fold, Variant::Standard, res.witness, opts);

  PebblingResult out;
  out.value = res.size + 1;
  out.kind = fold == 1 ? NumberKind::Pi : NumberKind::PiK;
  out.fold = fold;
  out.root_attaining_max = root;
  out.witness_unsolvable = res.witness;
  out.stats = solver.stats();
  out.stats.nodes_expanded += res.nodes;
  return out;
}

/// φ(G, root): pebbling number when each pebble first gets one free simultaneous move.
inline PebblingResult rooted_phi(const Graph& g, Vertex root, NumberOptions opts = {}) {
  require_connected(g);
  if (root >= g.order()) throw InputError("root out of range");
  FreeMoveSolver solver(g, root, {opts.config_cap, opts.budget, false});
  const auto& dist = solver.standard().distances();

  MaxUnsolvableProblem p;
  p.order = g.order();
  p.budget = opts.budget;
  p.vertex_cap.assign(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    // 2^{d-1} pebbles at distance d step together to distance d-1 and finish from there.
    if (dist[v] >= 1)
      p.vertex_cap[v] = static_cast<Count>(std::min<std::uint64_t>((std::uint64_t{1} << (dist[v] - 1)) - 1,
                                                                   opts.config_cap));
    p.size_cap += p.vertex_cap[v];
  }
  for (Vertex v : detail::by_decreasing_distance(dist))
    if (p.vertex_cap[v] > 0) p.vertices.push_back(v);
  if (p.size_cap >= opts.config_cap) throw CapExceeded("phi search would exceed the configuration cap");

  auto res = find_max_unsolvable(
      p, [&](const std::vector<Count>& c) { return solver.solvable(c); },
      [&] { return solver.standard().stats().nodes_expanded + solver.outcomes_examined(); });
  detail::confirm_unsolvable(g, root, 1, Variant::FreeMove, res.witness, opts);

  PebblingResult out;
  out.value = res.size + 1;
  out.kind = NumberKind::Phi;
  out.root_attaining_max = root;
  out.witness_unsolvable = res.witness;
  out.stats = solver.standard().stats();
  out.stats.nodes_expanded += res.nodes + solver.outcomes_examined();
  return out;
}

namespace detail {

template <class Rooted>
PebblingResult maximize_over_roots(const Graph& g, const NumberOptions& opts, Rooted&& rooted) {
  require_connected(g);
  std::vector<Vertex> roots;
  if (opts.use_orbits) {
    auto orbit = vertex_orbits(g);
    for (Vertex v = 0; v < g.order(); ++v)
      if (orbit[v] == v) roots.push_back(v);
  } else {
    for (Vertex v = 0; v < g.order(); ++v) roots.push_back(v);
  }
  std::vector<std::optional<PebblingResult>> per_root(roots.size());
  parallel_for(roots.size(), opts.threads, [&](std::size_t i) { per_root[i] = rooted(roots[i]); });
  PebblingResult best = *per_root[0];
  SolveStats total;
  for (const auto& r : per_root) {
    total.nodes_expanded += r->stats.nodes_expanded;
    total.memo_hits += r->stats.memo_hits;
    if (r->value > best.value) best = *r;  // roots ascend, so ties keep the smallest root
  }
  best.stats = total;
  return best;
}

}  // namespace detail

/// π_k(G) = max over roots of π_k(G, r).
inline PebblingResult pebbling_number(const Graph& g, Count fold = 1, NumberOptions opts = {}) {
  return detail::maximize_over_roots(g, opts, [&](Vertex r) { return rooted_pebbling_number(g, r, fold, opts); });
}

inline PebblingResult phi(const Graph& g, NumberOptions opts = {}) {
  return detail::maximize_over_roots(g, opts, [&](Vertex r) { return rooted_phi(g, r, opts); });
}

inline bool is_class0(const Graph& g, NumberOptions opts = {}) {
  return pebbling_number(g, 1, opts).value == g.order();
}

struct FrugalityRow {
  Count fold = 0;
  std::uint64_t pi_k = 0;
  std::uint64_t bound = 0;  // π + (k-1) 2^diam
  bool holds = false;
};

/// Necessary check only: the verdict means "frugal up to max_fold".
struct FrugalityReport {
  std::uint64_t pi = 0;
  std::uint32_t diameter = 0;
  Count max_fold = 0;
  std::vector<FrugalityRow> rows;
  /// False when a budget ran out before max_fold; rows then stop early.
  bool complete = true;
  bool frugal_up_to() const {
    return complete && std::all_of(rows.begin(), rows.end(), [](const FrugalityRow& r) { return r.holds; });
  }
};

inline FrugalityReport is_frugal_up_to(const Graph& g, Count max_fold, NumberOptions opts = {}) {
  if (max_fold < 2) throw InputError("frugality check needs K >= 2");
  require_connected(g);
  FrugalityReport rep;
  rep.max_fold = max_fold;
  rep.diameter = diameter(g);
  rep.pi = pebbling_number(g, 1, opts).value;
  for (Count k = 2; k <= max_fold; ++k) {
    FrugalityRow row;
    row.fold = k;
    row.bound = rep.pi + static_cast<std::uint64_t>(k - 1) * (std::uint64_t{1} << rep.diameter);
    try {
      row.pi_k = pebbling_number(g, k, opts).value;
    } catch (const BudgetExceeded&) {
      rep.complete = false;
      break;
    }
    row.holds = row.pi_k <= row.bound;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace pebbling
