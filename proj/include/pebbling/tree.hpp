#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "pebbling/graph.hpp"

namespace pebbling {

/// Exponents a_1 >= ... >= a_t of a maximum path partition of a rooted tree.
struct PathPartition {
  std::vector<std::uint32_t> exponents;

  std::size_t parts() const noexcept { return exponents.size(); }
  std::uint64_t edge_total() const {
    std::uint64_t s = 0;
    for (auto a : exponents) s += a;
    return s;
  }
};

struct TreePebbling {
  std::uint64_t value = 0;
  PathPartition partition;
};

/// Rooted pebbling number of a tree: sum 2^{a_i} - t + 1 over the maximum path
/// partition, built by repeatedly taking the longest root-ward path. At each vertex
/// the edge to a child extends the longest part of that child's partition (or
/// starts a part of length 1 at a leaf child).
inline TreePebbling tree_pebbling_number(const Graph& t, Vertex root) {
  if (!is_tree(t)) throw InputError("tree_pebbling_number: input is not a tree");
  if (root >= t.order()) throw InputError("root out of range");
  std::function<std::vector<std::uint32_t>(Vertex, Vertex)> parts_below = [&](Vertex v, Vertex parent) {
    std::vector<std::uint32_t> acc;
    for (Vertex c : t.neighbors(v)) {
      if (c == parent) continue;
      auto sub = parts_below(c, v);
      if (sub.empty()) {
        sub.push_back(1);
      } else {
        ++*std::max_element(sub.begin(), sub.end());
      }
      acc.insert(acc.end(), sub.begin(), sub.end());
    }
    return acc;
  };
  TreePebbling out;
  out.partition.exponents = parts_below(root, root);
  std::sort(out.partition.exponents.begin(), out.partition.exponents.end(), std::greater<>());
  std::uint64_t value = 1;
  for (auto a : out.partition.exponents) {
    if (a >= 63) throw CapExceeded("tree pebbling number overflows 64 bits");
    value += (std::uint64_t{1} << a) - 1;
  }
  out.value = value;
  return out;
}

}  // namespace pebbling
