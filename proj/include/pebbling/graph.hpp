#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "pebbling/error.hpp"

namespace pebbling {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Structured vertex name. Product vertices are pairs of factor labels; corona
/// vertices are either a base vertex or a copy vertex (base, inner).
class VertexLabel {
 public:
  enum class Kind { Atom, Pair, CoronaBase, CoronaCopy };

  static VertexLabel atom(std::string name) {
    VertexLabel l;
    l.kind_ = Kind::Atom;
    l.name_ = std::move(name);
    return l;
  }
  static VertexLabel pair(VertexLabel left, VertexLabel right) {
    VertexLabel l;
    l.kind_ = Kind::Pair;
    l.parts_ = {std::move(left), std::move(right)};
    return l;
  }
  static VertexLabel corona_base(VertexLabel base) {
    VertexLabel l;
    l.kind_ = Kind::CoronaBase;
    l.parts_ = {std::move(base)};
    return l;
  }
  static VertexLabel corona_copy(VertexLabel base, VertexLabel inner) {
    VertexLabel l;
    l.kind_ = Kind::CoronaCopy;
    l.parts_ = {std::move(base), std::move(inner)};
    return l;
  }

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  /// First component: left factor label, or the base label for corona vertices.
  const VertexLabel& left() const { return parts_.at(0); }
  /// Second component: right factor label, or the inner label of a corona copy vertex.
  const VertexLabel& right() const { return parts_.at(1); }

  std::string to_string() const {
    switch (kind_) {
      case Kind::Atom:
        return name_;
      case Kind::Pair:
        return "(" + parts_[0].to_string() + "," + parts_[1].to_string() + ")";
      case Kind::CoronaBase:
        return "base[" + parts_[0].to_string() + "]";
      case Kind::CoronaCopy:
        return "copy[" + parts_[0].to_string() + ";" + parts_[1].to_string() + "]";
    }
    return {};
  }

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;

 private:
  VertexLabel() = default;
  Kind kind_ = Kind::Atom;
  std::string name_;
  std::vector<VertexLabel> parts_;
};

enum class ProductOp { Box, Strong, Cross, Corona };

inline const char* to_string(ProductOp op) {
  switch (op) {
    case ProductOp::Box: return "box";
    case ProductOp::Strong: return "strong";
    case ProductOp::Cross: return "cross";
    case ProductOp::Corona: return "corona";
  }
  return "?";
}

/// Factor orders of a product graph; lets fibers be recovered by index arithmetic.
struct ProductShape {
  ProductOp op = ProductOp::Box;
  std::uint32_t left_order = 0;
  std::uint32_t right_order = 0;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(adj_.size()); }
  std::size_t size() const noexcept { return edges_.size(); }

  /// Edges with u < v, sorted.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Sorted neighbor list.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex a, Vertex b) const {
    return a < order() && b < order() && matrix_[a * order() + b] != 0;
  }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<VertexLabel>& labels() const noexcept { return labels_; }
  /// Label of v, or its index as an atom when the graph is unlabeled.
  VertexLabel label(Vertex v) const {
    if (labels_.empty()) return VertexLabel::atom(std::to_string(v));
    return labels_.at(v);
  }
  const std::optional<ProductShape>& shape() const noexcept { return shape_; }

  Graph with_labels(std::vector<VertexLabel> labels) const {
    if (labels.size() != order()) throw InputError("label count does not match vertex count");
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i + 1; j < labels.size(); ++j)
        if (labels[i] == labels[j]) throw InputError("duplicate vertex label " + labels[i].to_string());
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
  }
  Graph with_shape(ProductShape s) const {
    Graph g = *this;
    g.shape_ = s;
    return g;
  }
  /// Same vertices and edges, no decoration.
  Graph bare() const {
    Graph g = *this;
    g.labels_.clear();
    g.shape_.reset();
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

  friend Graph build_graph(std::uint32_t n, const std::vector<Edge>& edges);

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
  std::vector<char> matrix_;
  std::vector<VertexLabel> labels_;
  std::optional<ProductShape> shape_;
};

/// Normalizes an edge list into a Graph. Duplicate edges collapse; self-loops and
/// out-of-range endpoints are rejected naming the offending edge.
inline Graph build_graph(std::uint32_t n, const std::vector<Edge>& edges) {
  Graph g;
  g.adj_.assign(n, {});
  g.matrix_.assign(static_cast<std::size_t>(n) * n, 0);
  for (const Edge& e : edges) {
    const std::string desc = "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
    if (e.u >= n || e.v >= n) throw InputError("edge " + desc + " has an endpoint >= n=" + std::to_string(n));
    if (e.u == e.v) throw InputError("edge " + desc + " is a self-loop");
    if (g.matrix_[e.u * n + e.v]) continue;
    g.matrix_[e.u * n + e.v] = g.matrix_[e.v * n + e.u] = 1;
    g.edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

inline constexpr std::uint32_t kUnreachable = static_cast<std::uint32_t>(-1);

/// BFS distances from `source`; kUnreachable for other components.
inline std::vector<std::uint32_t> distances_from(const Graph& g, Vertex source) {
  if (source >= g.order()) throw InputError("vertex " + std::to_string(source) + " out of range");
  std::vector<std::uint32_t> dist(g.order(), kUnreachable);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u))
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto d = distances_from(g, 0);
  return std::none_of(d.begin(), d.end(), [](std::uint32_t x) { return x == kUnreachable; });
}

inline void require_connected(const Graph& g) {
  if (g.order() == 0) throw InputError("graph has no vertices");
  if (!is_connected(g)) throw DisconnectedError();
}

inline std::uint32_t eccentricity(const Graph& g, Vertex v) {
  auto d = distances_from(g, v);
  std::uint32_t best = 0;
  for (auto x : d) {
    if (x == kUnreachable) throw DisconnectedError("diameter undefined: graph is not connected");
    best = std::max(best, x);
  }
  return best;
}

inline std::uint32_t diameter(const Graph& g) {
  if (g.order() == 0) throw InputError("graph has no vertices");
  std::uint32_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

inline std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v) {
  std::vector<Vertex> out = g.neighbors(v);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

/// Either a proper 2-coloring, or an odd cycle as a closed vertex walk (first != last,
/// consecutive entries adjacent, last adjacent to first).
struct BipartiteResult {
  bool bipartite = false;
  std::vector<int> coloring;
  std::vector<Vertex> odd_cycle;
};

inline BipartiteResult is_bipartite(const Graph& g) {
  const std::uint32_t n = g.order();
  BipartiteResult res;
  std::vector<int> color(n, -1);
  std::vector<Vertex> parent(n, 0);
  std::vector<std::uint32_t> depth(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    parent[s] = s;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          q.push(w);
        } else if (color[w] == color[u]) {
          // Walk both endpoints up the BFS tree to their common ancestor.
          std::vector<Vertex> a{u}, b{w};
          Vertex x = u, y = w;
          while (depth[x] > depth[y]) a.push_back(x = parent[x]);
          while (depth[y] > depth[x]) b.push_back(y = parent[y]);
          while (x != y) {
            a.push_back(x = parent[x]);
            b.push_back(y = parent[y]);
          }
          b.pop_back();
          res.odd_cycle = a;
          res.odd_cycle.insert(res.odd_cycle.end(), b.rbegin(), b.rend());
          return res;
        }
      }
    }
  }
  res.bipartite = true;
  res.coloring = std::move(color);
  return res;
}

/// BFS tree: each vertex is attached to its first-discovered neighbor, so tree
/// distances from `root` equal graph distances.
inline Graph bfs_spanning_tree(const Graph& g, Vertex root) {
  require_connected(g);
  if (root >= g.order()) throw InputError("root out of range");
  std::vector<bool> seen(g.order(), false);
  std::vector<Edge> tree;
  std::queue<Vertex> q;
  seen[root] = true;
  q.push(root);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = true;
        tree.push_back({u, w});
        q.push(w);
      }
  }
  return build_graph(g.order(), tree);
}

enum class BipartiteStrategy { Tree, Greedy };

inline const char* to_string(BipartiteStrategy s) {
  return s == BipartiteStrategy::Tree ? "tree" : "greedy";
}

/// Connected spanning bipartite subgraph. `Tree` is the BFS tree from `root`;
/// `Greedy` keeps that tree's 2-coloring and adds every bichromatic edge of g.
inline Graph spanning_bipartite_subgraph(const Graph& g, BipartiteStrategy strategy, Vertex root = 0) {
  Graph tree = bfs_spanning_tree(g, root);
  if (strategy == BipartiteStrategy::Tree) return tree;
  auto depth = distances_from(tree, root);
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if ((depth[e.u] & 1U) != (depth[e.v] & 1U)) kept.push_back(e);
  return build_graph(g.order(), kept);
}

inline bool is_subgraph_of(const Graph& sub, const Graph& g) {
  if (sub.order() != g.order()) return false;
  return std::all_of(sub.edges().begin(), sub.edges().end(),
                     [&](const Edge& e) { return g.adjacent(e.u, e.v); });
}

inline bool is_tree(const Graph& g) {
  return g.order() > 0 && g.size() + 1 == g.order() && is_connected(g);
}

inline Graph without_edge(const Graph& g, const Edge& drop) {
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (!(e == drop)) kept.push_back(e);
  return build_graph(g.order(), kept);
}

/// Disjoint union with vertices of `b` shifted by |a|.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es = a.edges();
  for (const Edge& e : b.edges()) es.push_back({e.u + a.order(), e.v + a.order()});
  return build_graph(a.order() + b.order(), es);
}

}  // namespace pebbling
