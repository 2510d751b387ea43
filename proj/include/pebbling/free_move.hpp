#pragma once

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "pebbling/solver.hpp"

namespace pebbling {

/// Solvability when every pebble may first make one simultaneous cost-free move
/// to a neighbor (or stay put), followed by ordinary pebbling. Fold is always 1.
///
/// All outcomes of the free round are enumerated (for each vertex, every split of
/// its pebbles over its closed neighborhood), deduplicated, and handed to a
/// standard Solver whose table is shared across outcomes.
class FreeMoveSolver {
 public:
  FreeMoveSolver(const Graph& g, Vertex root, SolverOptions opts = {}) : base_(g, root, 1, opts), opts_(opts) {
    const auto& dist = base_.distances();
    closed_.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      closed_[v] = closed_neighborhood(g, v);
      std::stable_sort(closed_[v].begin(), closed_[v].end(),
                       [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
    }
  }

  const Solver& standard() const noexcept { return base_; }
  std::uint64_t outcomes_examined() const noexcept { return outcomes_; }

  bool solvable(const std::vector<Count>& counts) { return run(counts, false); }

  SolveOutcome solve(const Configuration& c) {
    const SolveStats before = base_.stats();
    const std::uint64_t outcomes_before = outcomes_;
    SolveOutcome out;
    out.solvable = run(c.counts(), opts_.witness.value_or(base_.graph().order() <= 12));
    if (out.solvable && !witness_.empty()) out.witness = witness_;
    else if (out.solvable && opts_.witness.value_or(base_.graph().order() <= 12)) out.witness = std::vector<Move>{};
    out.stats.nodes_expanded = base_.stats().nodes_expanded - before.nodes_expanded + (outcomes_ - outcomes_before);
    out.stats.memo_hits = base_.stats().memo_hits - before.memo_hits;
    return out;
  }

 private:
  bool run(const std::vector<Count>& c, bool want_witness) {
    const Graph& g = base_.graph();
    const Vertex root = base_.root();
    if (c.size() != g.order()) throw InputError("configuration length does not match graph");
    std::uint64_t total = 0;
    for (Count x : c) total += x;
    if (total > opts_.config_cap) throw CapExceeded("configuration size exceeds cap");
    witness_.clear();
    if (c[root] >= 1) return true;
    // A free move at most doubles each pebble's weight.
    if (2 * base_.weight_of(c) < base_.weight_threshold()) return false;

    want_witness_ = want_witness;
    start_ = &c;
    active_.clear();
    for (Vertex v = 0; v < g.order(); ++v)
      if (c[v] > 0) active_.push_back(v);
    outcome_.assign(g.order(), 0);
    placed_.clear();
    seen_.clear();
    return enumerate(0, 0, active_.empty() ? 0 : c[active_[0]]);
  }

  bool enumerate(std::size_t vi, std::size_t bin, Count remaining) {
    if (vi == active_.size()) return leaf();
    const Vertex v = active_[vi];
    const auto& nb = closed_[v];
    const Vertex target = nb[bin];
    const bool last_bin = bin + 1 == nb.size();
    for (Count x = remaining;; --x) {
      if (!last_bin || x == remaining) {
        outcome_[target] += x;
        placed_.push_back({v, target, x});
        const bool ok = last_bin ? enumerate(vi + 1, 0, vi + 1 < active_.size() ? (*start_)[active_[vi + 1]] : 0)
                                 : enumerate(vi, bin + 1, remaining - x);
        placed_.pop_back();
        outcome_[target] -= x;
        if (ok) return true;
      }
      if (x == 0 || last_bin) break;
    }
    return false;
  }

  bool leaf() {
    if (++outcomes_ > opts_.budget) throw BudgetExceeded(0, 0);
    const Vertex root = base_.root();
    if (outcome_[root] >= 1) {
      record({});
      return true;
    }
    std::string key(outcome_.size() * sizeof(Count), '\0');
    std::copy_n(reinterpret_cast<const char*>(outcome_.data()), key.size(), key.data());
    if (!seen_.insert(std::move(key)).second) return false;
    if (!base_.solvable(outcome_)) return false;
    if (want_witness_) {
      auto rest = base_.solve(Configuration(outcome_));
      record(rest.witness.value_or(std::vector<Move>{}));
    }
    return true;
  }

  void record(const std::vector<Move>& paid) {
    if (!want_witness_) return;
    witness_.clear();
    for (const auto& p : placed_)
      if (p.from != p.to)
        for (Count i = 0; i < p.count; ++i) witness_.push_back({p.from, p.to, MoveKind::Free});
    witness_.insert(witness_.end(), paid.begin(), paid.end());
  }

  struct Placement {
    Vertex from;
    Vertex to;
    Count count;
  };

  Solver base_;
  SolverOptions opts_;
  std::vector<std::vector<Vertex>> closed_;
  const std::vector<Count>* start_ = nullptr;
  std::vector<Vertex> active_;
  std::vector<Count> outcome_;
  std::vector<Placement> placed_;
  std::unordered_set<std::string> seen_;
  std::vector<Move> witness_;
  bool want_witness_ = false;
  std::uint64_t outcomes_ = 0;
};

}  // namespace pebbling
