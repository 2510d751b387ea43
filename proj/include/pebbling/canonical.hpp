#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "pebbling/graph.hpp"
#include "pebbling/graph_io.hpp"

namespace pebbling {

inline constexpr std::uint32_t kDefaultCanonicalCap = 8;

namespace detail {

// Lexicographically least graph6 bit string over all vertex orderings. Column j
// of the upper triangle depends only on the first j+1 chosen vertices, so a
// partial ordering can be compared against the incumbent as soon as it is extended.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), used_(n_, false) {
    perm_.reserve(n_);
    bits_.reserve(n_ * n_ / 2 + 1);
  }

  std::vector<Vertex> run() {
    extend();
    return best_perm_;
  }

 private:
  // -1 / 0 / +1 comparing the current prefix with the incumbent's prefix.
  int compare_prefix() const {
    for (std::size_t k = 0; k < bits_.size(); ++k)
      if (bits_[k] != best_bits_[k]) return bits_[k] < best_bits_[k] ? -1 : 1;
    return 0;
  }

  void extend() {
    const std::size_t j = perm_.size();
    if (j == n_) {
      if (best_perm_.empty() || compare_prefix() < 0) {
        best_bits_ = bits_;
        best_perm_ = perm_;
      }
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      const std::size_t mark = bits_.size();
      for (std::size_t i = 0; i < j; ++i) bits_.push_back(g_.adjacent(perm_[i], v) ? 1 : 0);
      if (best_perm_.empty() || compare_prefix() <= 0) {
        used_[v] = true;
        perm_.push_back(v);
        extend();
        perm_.pop_back();
        used_[v] = false;
      }
      bits_.resize(mark);
    }
  }

  const Graph& g_;
  std::uint32_t n_;
  std::vector<bool> used_;
  std::vector<Vertex> perm_;
  std::vector<char> bits_;
  std::vector<Vertex> best_perm_;
  std::vector<char> best_bits_;
};

}  // namespace detail

/// Isomorphism-invariant byte string: graph6 encoding of the relabeling whose
/// adjacency upper triangle is lexicographically smallest. Factorial cost, so n is capped.
inline std::string canonical_form(const Graph& g, std::uint32_t cap = kDefaultCanonicalCap) {
  if (g.order() > cap)
    throw CapExceeded("canonical_form: n=" + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap) +
                      "; skip deduplication for this graph");
  if (g.order() == 0) return to_graph6(g);
  auto perm = detail::CanonicalSearch(g).run();
  std::vector<Vertex> pos(g.order());
  for (Vertex i = 0; i < g.order(); ++i) pos[perm[i]] = i;
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) es.push_back({pos[e.u], pos[e.v]});
  return to_graph6(build_graph(g.order(), es));
}

/// Permutation-relabeled copy: vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) es.push_back({perm.at(e.u), perm.at(e.v)});
  return build_graph(g.order(), es);
}

namespace detail {

inline bool extend_automorphism(const Graph& g, const std::vector<Vertex>& order, std::size_t depth,
                                std::vector<Vertex>& image, std::vector<bool>& taken) {
  if (depth == order.size()) return true;
  const Vertex x = order[depth];
  for (Vertex y = 0; y < g.order(); ++y) {
    if (taken[y] || g.degree(x) != g.degree(y)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < depth && ok; ++i)
      ok = g.adjacent(order[i], x) == g.adjacent(image[order[i]], y);
    if (!ok) continue;
    image[x] = y;
    taken[y] = true;
    if (extend_automorphism(g, order, depth + 1, image, taken)) return true;
    taken[y] = false;
  }
  return false;
}

}  // namespace detail

/// Whether some automorphism maps u to v (backtracking with adjacency pruning).
inline bool automorphic(const Graph& g, Vertex u, Vertex v) {
  if (g.degree(u) != g.degree(v)) return false;
  if (u == v) return true;
  // Fix u first, then the rest in BFS order from u so constraints bite early.
  std::vector<Vertex> order{u};
  std::vector<bool> seen(g.order(), false);
  seen[u] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex w : g.neighbors(order[i]))
      if (!seen[w]) {
        seen[w] = true;
        order.push_back(w);
      }
  for (Vertex w = 0; w < g.order(); ++w)
    if (!seen[w]) order.push_back(w);
  std::vector<Vertex> image(g.order(), 0);
  std::vector<bool> taken(g.order(), false);
  image[u] = v;
  taken[v] = true;
  return detail::extend_automorphism(g, order, 1, image, taken);
}

/// Orbit id per vertex (smallest vertex of the orbit). Above `cap` vertices every
/// vertex is reported as its own orbit.
inline std::vector<Vertex> vertex_orbits(const Graph& g, std::uint32_t cap = 16) {
  std::vector<Vertex> orbit(g.order());
  std::iota(orbit.begin(), orbit.end(), 0);
  if (g.order() > cap) return orbit;
  for (Vertex v = 1; v < g.order(); ++v)
    for (Vertex u = 0; u < v; ++u)
      if (orbit[u] == u && automorphic(g, u, v)) {
        orbit[v] = u;
        break;
      }
  return orbit;
}

}  // namespace pebbling
