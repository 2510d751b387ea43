#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "pebbling/graph.hpp"
#include "pebbling/products.hpp"

namespace pebbling {

inline Graph path_graph(std::uint32_t n) {
  if (n < 1) throw InputError("path needs at least 1 vertex");
  std::vector<Edge> es;
  for (Vertex i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return build_graph(n, es);
}

inline Graph cycle_graph(std::uint32_t n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
  return build_graph(n, es);
}

inline Graph complete_graph(std::uint32_t n) {
  if (n < 1) throw InputError("complete graph needs at least 1 vertex");
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) es.push_back({i, j});
  return build_graph(n, es);
}

/// K_{s,t}: parts {0..s-1} and {s..s+t-1}.
inline Graph complete_bipartite_graph(std::uint32_t s, std::uint32_t t) {
  if (s < 1 || t < 1) throw InputError("complete bipartite graph needs both parts non-empty");
  std::vector<Edge> es;
  for (Vertex i = 0; i < s; ++i)
    for (Vertex j = 0; j < t; ++j) es.push_back({i, s + j});
  return build_graph(s + t, es);
}

/// K_{1,m} with center 0.
inline Graph star_graph(std::uint32_t m) {
  if (m < 1) throw InputError("star needs at least 1 leaf");
  return complete_bipartite_graph(1, m);
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 5; ++i) {
    es.push_back({i, (i + 1) % 5});
    es.push_back({5 + i, 5 + (i + 2) % 5});
    es.push_back({i, 5 + i});
  }
  return build_graph(10, es);
}

inline Graph hypercube_graph(unsigned k) {
  if (k < 1) throw InputError("hypercube dimension must be >= 1");
  return box_power(complete_graph(2), k);
}

/// Sun S_{2m} = K_m ⋈ K_1.
inline Graph sun_graph(std::uint32_t m) {
  if (m < 2) throw InputError("sun needs m >= 2");
  return corona(complete_graph(m), complete_graph(1));
}

namespace detail {

inline std::vector<std::uint32_t> parse_params(std::string_view s) {
  std::vector<std::uint32_t> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string_view::npos) next = s.size();
    std::string_view tok = s.substr(pos, next - pos);
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw InputError("bad family parameter '" + std::string(tok) + "'");
    out.push_back(value);
    pos = next + 1;
  }
  return out;
}

}  // namespace detail

/// Named family. Recognized ids: path, cycle, complete, complete_bipartite (s,t),
/// star (m leaves), petersen, hypercube (k), sun (m).
inline Graph family(std::string_view name, const std::vector<std::uint32_t>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw InputError("family '" + std::string(name) + "' takes " + std::to_string(count) + " parameter(s)");
  };
  if (name == "path") return need(1), path_graph(params[0]);
  if (name == "cycle") return need(1), cycle_graph(params[0]);
  if (name == "complete") return need(1), complete_graph(params[0]);
  if (name == "complete_bipartite") return need(2), complete_bipartite_graph(params[0], params[1]);
  if (name == "star") return need(1), star_graph(params[0]);
  if (name == "petersen") return need(0), petersen_graph();
  if (name == "hypercube") return need(1), hypercube_graph(params[0]);
  if (name == "sun") return need(1), sun_graph(params[0]);
  throw InputError("unknown graph family '" + std::string(name) + "'");
}

/// Parses "name:p1,p2" (or just "name").
inline Graph family(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) return family(spec, {});
  return family(spec.substr(0, colon), detail::parse_params(spec.substr(colon + 1)));
}

}  // namespace pebbling
