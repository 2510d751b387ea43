#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "pebbling/configuration.hpp"
#include "pebbling/error.hpp"
#include "pebbling/graph.hpp"

namespace pebbling {

enum class Variant { Standard, FreeMove };

inline const char* to_string(Variant v) { return v == Variant::Standard ? "standard" : "free"; }

struct SolveQuery {
  Graph graph;
  Vertex root = 0;
  Count fold = 1;
  Variant variant = Variant::Standard;
};

struct SolveStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t memo_hits = 0;
};

struct SolveOutcome {
  bool solvable = false;
  /// Present when solvable and witnesses were requested.
  std::optional<std::vector<Move>> witness;
  SolveStats stats;
};

struct SolverOptions {
  /// Largest accepted |C|.
  std::uint64_t config_cap = 4096;
  /// Node expansions before BudgetExceeded.
  std::uint64_t budget = 100'000'000;
  /// Produce witnesses from solve(); unset means "when n <= 12".
  std::optional<bool> witness;
};

/// Exact k-fold solvability for one (graph, root, fold). Depth-first search over
/// configurations reachable by pebbling moves, memoized on the exact configuration.
/// Two admissible shortcuts run before a node is expanded:
///   - weight: sum_v C(v) 2^-d(v) never increases under a move, so weight < k is a dead end;
///   - big stack: C(v) >= k 2^d(v) reaches the root along a geodesic.
/// The table persists across calls, so a sequence of queries on the same instance
/// shares work.
class Solver {
 public:
  Solver(const Graph& g, Vertex root, Count fold, SolverOptions opts = {})
      : graph_(g), root_(root), fold_(fold), opts_(opts) {
    require_connected(graph_);
    if (root_ >= graph_.order()) throw InputError("root " + std::to_string(root_) + " out of range");
    if (fold_ < 1) throw InputError("fold must be >= 1");
    dist_ = distances_from(graph_, root_);
    max_dist_ = *std::max_element(dist_.begin(), dist_.end());
    if (max_dist_ > 40) throw CapExceeded("solver: graph diameter too large for exact weights");
    unit_.resize(graph_.order());
    for (Vertex v = 0; v < graph_.order(); ++v) unit_[v] = std::uint64_t{1} << (max_dist_ - dist_[v]);
    threshold_ = static_cast<std::uint64_t>(fold_) << max_dist_;

    step_toward_root_.assign(graph_.order(), root_);
    for (Vertex v = 0; v < graph_.order(); ++v)
      for (Vertex w : graph_.neighbors(v))
        if (dist_[w] + 1 == dist_[v]) {
          step_toward_root_[v] = w;
          break;
        }

    for (const Edge& e : graph_.edges()) {
      moves_.push_back({e.u, e.v});
      moves_.push_back({e.v, e.u});
    }
    std::sort(moves_.begin(), moves_.end(), [&](const auto& a, const auto& b) {
      return std::tuple(dist_[a.second], dist_[a.first], a.first, a.second) <
             std::tuple(dist_[b.second], dist_[b.first], b.first, b.second);
    });
  }

  const Graph& graph() const noexcept { return graph_; }
  Vertex root() const noexcept { return root_; }
  Count fold() const noexcept { return fold_; }
  const std::vector<std::uint32_t>& distances() const noexcept { return dist_; }
  const SolveStats& stats() const noexcept { return stats_; }
  std::size_t table_size() const noexcept { return table_.size(); }

  /// Decision only.
  bool solvable(const std::vector<Count>& counts) {
    check_input(counts);
    scratch_ = counts;
    return search(scratch_, weight_of(scratch_));
  }

  SolveOutcome solve(const Configuration& c) {
    const SolveStats before = stats_;
    SolveOutcome out;
    out.solvable = solvable(c.counts());
    if (out.solvable && opts_.witness.value_or(graph_.order() <= 12)) out.witness = reconstruct(c.counts());
    out.stats.nodes_expanded = stats_.nodes_expanded - before.nodes_expanded;
    out.stats.memo_hits = stats_.memo_hits - before.memo_hits;
    return out;
  }

  /// Potential in units of 2^-maxdist; compare against fold << maxdist.
  std::uint64_t weight_of(const std::vector<Count>& c) const {
    std::uint64_t w = 0;
    for (Vertex v = 0; v < c.size(); ++v) w += c[v] * unit_[v];
    return w;
  }
  std::uint64_t weight_threshold() const noexcept { return threshold_; }

 private:
  void check_input(const std::vector<Count>& counts) const {
    if (counts.size() != graph_.order())
      throw InputError("configuration has " + std::to_string(counts.size()) + " entries, graph has " +
                       std::to_string(graph_.order()) + " vertices");
    std::uint64_t total = 0;
    for (Count x : counts) total += x;
    if (total > opts_.config_cap)
      throw CapExceeded("configuration size " + std::to_string(total) + " exceeds cap " +
                        std::to_string(opts_.config_cap));
  }

  std::optional<Vertex> big_stack(const std::vector<Count>& c) const {
    for (Vertex v = 0; v < c.size(); ++v)
      if (static_cast<std::uint64_t>(c[v]) >= (static_cast<std::uint64_t>(fold_) << dist_[v])) return v;
    return std::nullopt;
  }

  void encode(const std::vector<Count>& c, std::string& key) const {
    key.clear();
    for (Count x : c) {
      if (x < 255) {
        key.push_back(static_cast<char>(x));
      } else {
        key.push_back(static_cast<char>(255));
        key.push_back(static_cast<char>(x >> 8));
        key.push_back(static_cast<char>(x & 255));
      }
    }
  }

  bool search(std::vector<Count>& c, std::uint64_t weight) {
    if (c[root_] >= fold_) return true;
    if (weight < threshold_) return false;
    if (big_stack(c)) return true;

    std::string key;
    encode(c, key);
    if (auto it = table_.find(key); it != table_.end()) {
      ++stats_.memo_hits;
      return it->second;
    }
    if (++stats_.nodes_expanded > opts_.budget) throw BudgetExceeded(0, 0);

    bool result = false;
    for (const auto& [from, to] : moves_) {
      if (c[from] < 2) continue;
      c[from] -= 2;
      c[to] += 1;
      const std::uint64_t w = weight - 2 * unit_[from] + unit_[to];
      const bool ok = search(c, w);
      c[from] += 2;
      c[to] -= 1;
      if (ok) {
        result = true;
        break;
      }
    }
    table_.emplace(std::move(key), result);
    return result;
  }

  std::vector<Move> reconstruct(std::vector<Count> c) {
    std::vector<Move> out;
    while (c[root_] < fold_) {
      if (auto v = big_stack(c)) {
        // Push fold * 2^d pebbles down the geodesic, halving at each step.
        std::uint64_t carry = static_cast<std::uint64_t>(fold_) << dist_[*v];
        for (Vertex at = *v; at != root_; at = step_toward_root_[at], carry /= 2)
          for (std::uint64_t i = 0; i < carry / 2; ++i) out.push_back({at, step_toward_root_[at], MoveKind::Paid});
        return out;
      }
      bool advanced = false;
      for (const auto& [from, to] : moves_) {
        if (c[from] < 2) continue;
        c[from] -= 2;
        c[to] += 1;
        if (search(c, weight_of(c))) {
          out.push_back({from, to, MoveKind::Paid});
          advanced = true;
          break;
        }
        c[from] += 2;
        c[to] -= 1;
      }
      if (!advanced) throw InternalError("witness reconstruction found no solvable child");
    }
    return out;
  }

  Graph graph_;
  Vertex root_;
  Count fold_;
  SolverOptions opts_;
  std::vector<std::uint32_t> dist_;
  std::uint32_t max_dist_ = 0;
  std::vector<std::uint64_t> unit_;
  std::uint64_t threshold_ = 0;
  std::vector<Vertex> step_toward_root_;
  std::vector<std::pair<Vertex, Vertex>> moves_;
  std::unordered_map<std::string, bool> table_;
  std::vector<Count> scratch_;
  SolveStats stats_;
};

}  // namespace pebbling
