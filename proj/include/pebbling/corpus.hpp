#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pebbling/canonical.hpp"
#include "pebbling/families.hpp"
#include "pebbling/graph_io.hpp"

namespace pebbling {

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Short human name when g is a recognizable family member, else "graph6:<code>".
inline std::string describe(const Graph& g) {
  const std::uint32_t n = g.order();
  const std::size_t m = g.size();
  if (n >= 1 && m == static_cast<std::size_t>(n) * (n - 1) / 2) return "complete:" + std::to_string(n);
  if (is_connected(g)) {
    std::size_t max_deg = 0, leaves = 0;
    for (Vertex v = 0; v < n; ++v) {
      max_deg = std::max(max_deg, g.degree(v));
      leaves += g.degree(v) == 1;
    }
    if (n >= 3 && m == n && max_deg == 2) return "cycle:" + std::to_string(n);
    if (m + 1 == n && max_deg <= 2) return "path:" + std::to_string(n);
    if (n >= 4 && m + 1 == n && max_deg == n - 1) return "star:" + std::to_string(n - 1);
  }
  return "graph6:" + to_graph6(g);
}

inline NamedGraph named(Graph g) {
  auto name = describe(g);
  return {std::move(name), std::move(g)};
}

struct CorpusSpec {
  std::uint32_t min_vertices = 2;
  std::uint32_t max_vertices = 3;
  bool connected_only = true;
  /// Keep only bipartite (true) or only nonbipartite (false) graphs.
  std::optional<bool> bipartite;
  /// Largest |G||H| admitted into the pair corpus.
  std::uint64_t product_cap = 12;
  /// One representative per isomorphism class.
  bool dedup = true;
};

namespace detail {

// All graphs on n vertices up to isomorphism, by adding vertex n-1 with every
// neighbor set to each class on n-1 vertices.
inline std::vector<Graph> all_graphs_up_to_iso(std::uint32_t n) {
  std::vector<Graph> level{build_graph(1, {})};
  if (n == 0) return {build_graph(0, {})};
  for (std::uint32_t k = 2; k <= n; ++k) {
    std::map<std::string, Graph> next;
    for (const Graph& g : level)
      for (std::uint32_t mask = 0; mask < (1U << (k - 1)); ++mask) {
        std::vector<Edge> es = g.edges();
        for (Vertex v = 0; v + 1 < k; ++v)
          if (mask & (1U << v)) es.push_back({v, k - 1});
        Graph h = build_graph(k, es);
        next.try_emplace(canonical_form(h), h);
      }
    level.clear();
    for (auto& [code, g] : next) level.push_back(parse_graph6(code));
  }
  return level;
}

inline std::vector<Graph> all_labeled_graphs(std::uint32_t n) {
  if (n > 6) throw CapExceeded("labeled enumeration without dedup is limited to n <= 6");
  std::vector<Edge> slots;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) slots.push_back({i, j});
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Edge> es;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask & (std::uint64_t{1} << b)) es.push_back(slots[b]);
    out.push_back(build_graph(n, es));
  }
  return out;
}

}  // namespace detail

/// Graphs with min_vertices..max_vertices vertices passing the filters, ordered by
/// (order, edge count, graph6 code).
inline std::vector<NamedGraph> generate_corpus(const CorpusSpec& spec) {
  if (spec.max_vertices > kDefaultCanonicalCap) throw CapExceeded("corpus vertex cap is at most 8");
  std::vector<Graph> all;
  for (std::uint32_t n = std::max<std::uint32_t>(spec.min_vertices, 1); n <= spec.max_vertices; ++n) {
    auto batch = spec.dedup ? detail::all_graphs_up_to_iso(n) : detail::all_labeled_graphs(n);
    for (auto& g : batch) {
      if (spec.connected_only && !is_connected(g)) continue;
      if (spec.bipartite && is_bipartite(g).bipartite != *spec.bipartite) continue;
      all.push_back(std::move(g));
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const Graph& a, const Graph& b) {
    return std::tuple(a.order(), a.size(), to_graph6(a)) < std::tuple(b.order(), b.size(), to_graph6(b));
  });
  std::vector<NamedGraph> out;
  for (auto& g : all) out.push_back(named(std::move(g)));
  return out;
}

/// Ordered index pairs (i, j) with |G_i||G_j| <= product_cap, in lexicographic order.
inline std::vector<std::pair<std::size_t, std::size_t>> generate_pairs(const CorpusSpec& spec,
                                                                       const std::vector<NamedGraph>& graphs) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = 0; j < graphs.size(); ++j)
      if (static_cast<std::uint64_t>(graphs[i].graph.order()) * graphs[j].graph.order() <= spec.product_cap)
        out.emplace_back(i, j);
  return out;
}

/// Unlabeled trees on n vertices, grown leaf by leaf and deduplicated.
inline std::vector<Graph> all_trees(std::uint32_t n) {
  if (n == 0) return {};
  if (n > kDefaultCanonicalCap) throw CapExceeded("tree enumeration is limited to n <= 8");
  std::vector<Graph> level{build_graph(1, {})};
  for (std::uint32_t k = 2; k <= n; ++k) {
    std::map<std::string, Graph> next;
    for (const Graph& t : level)
      for (Vertex v = 0; v + 1 < k; ++v) {
        std::vector<Edge> es = t.edges();
        es.push_back({v, k - 1});
        Graph h = build_graph(k, es);
        next.try_emplace(canonical_form(h), h);
      }
    level.clear();
    for (auto& [code, g] : next) level.push_back(parse_graph6(code));
  }
  return level;
}

}  // namespace pebbling
