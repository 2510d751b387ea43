#pragma once

#include <string>
#include <vector>

#include "pebbling/graph.hpp"

namespace pebbling {

namespace detail {

inline std::vector<VertexLabel> pair_labels(const Graph& g, const Graph& h) {
  std::vector<VertexLabel> labels;
  labels.reserve(static_cast<std::size_t>(g.order()) * h.order());
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = 0; b < h.order(); ++b) labels.push_back(VertexLabel::pair(g.label(a), h.label(b)));
  return labels;
}

// Row-major: (g, h) -> g * |H| + h.
template <class Rule>
Graph pair_product(const Graph& g, const Graph& h, ProductOp op, Rule adjacent) {
  const std::uint32_t nh = h.order();
  const std::uint32_t n = g.order() * nh;
  std::vector<Edge> edges;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      if (adjacent(x / nh, x % nh, y / nh, y % nh)) edges.push_back({x, y});
  return build_graph(n, edges).with_labels(pair_labels(g, h)).with_shape({op, g.order(), nh});
}

}  // namespace detail

/// G □ H: move along a factor edge in exactly one coordinate.
inline Graph box_product(const Graph& g, const Graph& h) {
  return detail::pair_product(g, h, ProductOp::Box, [&](Vertex g1, Vertex h1, Vertex g2, Vertex h2) {
    return (g1 == g2 && h.adjacent(h1, h2)) || (h1 == h2 && g.adjacent(g1, g2));
  });
}

/// G ⊠ H: box edges plus diagonals.
inline Graph strong_product(const Graph& g, const Graph& h) {
  return detail::pair_product(g, h, ProductOp::Strong, [&](Vertex g1, Vertex h1, Vertex g2, Vertex h2) {
    return (g1 == g2 && h.adjacent(h1, h2)) || (h1 == h2 && g.adjacent(g1, g2)) ||
           (g.adjacent(g1, g2) && h.adjacent(h1, h2));
  });
}

/// G × H: diagonals only. Disconnected when both factors are bipartite with an edge.
inline Graph cross_product(const Graph& g, const Graph& h) {
  return detail::pair_product(g, h, ProductOp::Cross, [&](Vertex g1, Vertex h1, Vertex g2, Vertex h2) {
    return g.adjacent(g1, g2) && h.adjacent(h1, h2);
  });
}

/// G ⋈ H. Base vertex g keeps index g; copy vertex (g, h) is |G| + g·|H| + h.
inline Graph corona(const Graph& g, const Graph& h) {
  const std::uint32_t ng = g.order();
  const std::uint32_t nh = h.order();
  auto copy_index = [&](Vertex base, Vertex inner) { return ng + base * nh + inner; };
  std::vector<Edge> edges = g.edges();
  for (Vertex b = 0; b < ng; ++b) {
    for (Vertex x = 0; x < nh; ++x) edges.push_back({b, copy_index(b, x)});
    for (const Edge& e : h.edges()) edges.push_back({copy_index(b, e.u), copy_index(b, e.v)});
  }
  std::vector<VertexLabel> labels;
  for (Vertex b = 0; b < ng; ++b) labels.push_back(VertexLabel::corona_base(g.label(b)));
  for (Vertex b = 0; b < ng; ++b)
    for (Vertex x = 0; x < nh; ++x) labels.push_back(VertexLabel::corona_copy(g.label(b), h.label(x)));
  return build_graph(ng * (1 + nh), edges).with_labels(std::move(labels)).with_shape({ProductOp::Corona, ng, nh});
}

inline Graph product(ProductOp op, const Graph& g, const Graph& h) {
  switch (op) {
    case ProductOp::Box: return box_product(g, h);
    case ProductOp::Strong: return strong_product(g, h);
    case ProductOp::Cross: return cross_product(g, h);
    case ProductOp::Corona: return corona(g, h);
  }
  throw InputError("unknown product");
}

/// Vertex count of `op` applied to factors of the given orders.
inline std::uint64_t product_order(ProductOp op, std::uint64_t ng, std::uint64_t nh) {
  return op == ProductOp::Corona ? ng * (1 + nh) : ng * nh;
}

/// G^{□k}; k = 0 gives K₁.
inline Graph box_power(const Graph& g, unsigned k) {
  Graph acc = build_graph(1, {});
  for (unsigned i = 0; i < k; ++i) acc = i == 0 ? g : box_product(acc, g);
  return acc;
}

enum class FiberSide { Left, Right };

/// Left: {anchor} × V(H). Right: V(G) × {anchor}.
inline std::vector<Vertex> fiber(const Graph& p, FiberSide side, Vertex anchor) {
  const auto& s = p.shape();
  if (!s || s->op == ProductOp::Corona) throw InputError("fiber requires a box, strong or cross product graph");
  std::vector<Vertex> out;
  if (side == FiberSide::Left) {
    if (anchor >= s->left_order) throw InputError("fiber anchor out of range");
    for (Vertex h = 0; h < s->right_order; ++h) out.push_back(anchor * s->right_order + h);
  } else {
    if (anchor >= s->right_order) throw InputError("fiber anchor out of range");
    for (Vertex g = 0; g < s->left_order; ++g) out.push_back(g * s->right_order + anchor);
  }
  return out;
}

/// Vertices of the copy H^base in a corona graph.
inline std::vector<Vertex> corona_copy(const Graph& p, Vertex base) {
  const auto& s = p.shape();
  if (!s || s->op != ProductOp::Corona) throw InputError("corona_copy requires a corona graph");
  if (base >= s->left_order) throw InputError("corona base out of range");
  std::vector<Vertex> out;
  for (Vertex h = 0; h < s->right_order; ++h) out.push_back(s->left_order + base * s->right_order + h);
  return out;
}

/// Subgraph induced on `vs`, relabeled 0..|vs|-1 in the given order.
inline Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vs) {
  std::vector<Edge> es;
  for (std::uint32_t i = 0; i < vs.size(); ++i)
    for (std::uint32_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) es.push_back({i, j});
  return build_graph(static_cast<std::uint32_t>(vs.size()), es);
}

}  // namespace pebbling
