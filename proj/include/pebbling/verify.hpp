#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "pebbling/bounds.hpp"
#include "pebbling/corpus.hpp"
#include "pebbling/parallel.hpp"

namespace pebbling {

enum class Suite { Proven, Conjectures, All };

inline CorpusSpec default_corpus() {
  CorpusSpec c;
  c.min_vertices = 1;
  c.max_vertices = 3;
  c.product_cap = 9;
  return c;
}

struct VerifyOptions {
  Suite suite = Suite::Proven;
  CorpusSpec corpus = default_corpus();
  NumberOptions numbers;
  unsigned jobs = 1;
  /// Ordered pairs checked in addition to the corpus pairs.
  std::vector<std::pair<NamedGraph, NamedGraph>> extra_pairs;
  std::vector<BipartiteStrategy> strategies{BipartiteStrategy::Tree, BipartiteStrategy::Greedy};
  /// Largest k for the box-power check.
  unsigned max_power = 2;
};

namespace detail {

using Task = std::function<std::vector<BoundReport>()>;

inline void graph_tasks(std::vector<Task>& out, Evaluator& ev, const VerifyOptions& o, const NamedGraph& g) {
  if (o.suite == Suite::Conjectures) return;
  out.push_back([&ev, &g] { return std::vector{check_fact1(ev, g)}; });
  out.push_back([&ev, &g] { return std::vector{check_spanning_monotone(ev, g)}; });
  out.push_back([&ev, &g] { return std::vector{check_phi_lemma(ev, g)}; });
  for (unsigned k = 2; k <= o.max_power; ++k) out.push_back([&ev, &g, k] { return std::vector{check_box_power(ev, g, k)}; });
  for (BipartiteStrategy s : o.strategies)
    out.push_back([&ev, &g, s] { return std::vector{check_cross_k2_lemma(ev, g, s)}; });
}

// Bounds symmetric in G and H, checked once per unordered pair.
inline void symmetric_tasks(std::vector<Task>& out, Evaluator& ev, const VerifyOptions& o, const NamedGraph& g,
                            const NamedGraph& h) {
  if (o.suite != Suite::Conjectures)
    out.push_back([&ev, &g, &h] {
      return std::vector{check_box_thm(ev, g, h), check_box_prop(ev, g, h), check_strong_thm(ev, g, h),
                         check_strong_prop(ev, g, h)};
    });
  if (o.suite != Suite::Proven)
    out.push_back([&ev, &g, &h] { return std::vector{check_box_graham(ev, g, h), check_strong_conj(ev, g, h)}; });
}

inline void ordered_tasks(std::vector<Task>& out, Evaluator& ev, const VerifyOptions& o, const NamedGraph& g,
                          const NamedGraph& h) {
  if (o.suite != Suite::Conjectures) {
    out.push_back([&ev, &g, &h] { return std::vector{check_box_frugal(ev, g, h)}; });
    for (BipartiteStrategy s : o.strategies)
      out.push_back([&ev, &g, &h, s] { return check_cross_thm(ev, g, h, s, s); });
    out.push_back([&ev, &g, &h] {
      std::vector<BoundReport> rs{check_corona_thm(ev, g, h), check_corona_lemma_2pig(ev, g, h)};
      for (Count k = 1; k <= 2; ++k) rs.push_back(check_corona_lemma_2k(ev, g, h, 0, k));
      rs.push_back(check_corona_lemma_42(ev, g, h, g.graph.order()));
      return rs;
    });
  }
  if (o.suite != Suite::Proven) out.push_back([&ev, &g, &h] { return std::vector{check_cross_conj(ev, g, h)}; });
}

}  // namespace detail

/// Runs the selected suite over the corpus and the extra pairs. Output order is the
/// task order: per-graph checks, unordered pairs, ordered pairs, then extra pairs.
inline std::vector<BoundReport> run_verify(const VerifyOptions& o) {
  BoundsConfig cfg;
  cfg.numbers = o.numbers;
  cfg.numbers.threads = 1;  // parallelism lives at the task level
  cfg.product_cap = o.corpus.product_cap;
  Evaluator ev(cfg);

  const std::vector<NamedGraph> graphs = generate_corpus(o.corpus);
  const auto pairs = generate_pairs(o.corpus, graphs);

  std::vector<detail::Task> tasks;
  for (const auto& g : graphs) detail::graph_tasks(tasks, ev, o, g);
  for (const auto& [i, j] : pairs)
    if (i <= j) detail::symmetric_tasks(tasks, ev, o, graphs[i], graphs[j]);
  for (const auto& [i, j] : pairs) detail::ordered_tasks(tasks, ev, o, graphs[i], graphs[j]);
  for (const auto& [g, h] : o.extra_pairs) {
    detail::symmetric_tasks(tasks, ev, o, g, h);
    detail::ordered_tasks(tasks, ev, o, g, h);
  }

  std::vector<std::vector<BoundReport>> results(tasks.size());
  parallel_for(tasks.size(), o.jobs, [&](std::size_t i) { results[i] = tasks[i](); });
  std::vector<BoundReport> out;
  for (auto& rs : results)
    for (auto& r : rs) out.push_back(std::move(r));
  return out;
}

/// Proven-bound rows that failed; any entry means a defect somewhere in the stack.
inline std::vector<const BoundReport*> proven_failures(const std::vector<BoundReport>& reports) {
  std::vector<const BoundReport*> out;
  for (const auto& r : reports)
    if (r.verdict == Verdict::Fails && !is_conjecture(r.id)) out.push_back(&r);
  return out;
}

}  // namespace pebbling
