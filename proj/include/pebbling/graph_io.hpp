#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pebbling/graph.hpp"

namespace pebbling {

/// Edge-list text: first line "n m", then m lines "u v" (0-based). '#' starts a comment.
inline Graph read_edge_list(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw InputError("edge list: missing 'n m' header");
  auto read_pair = [](const std::string& text, std::size_t lineno, long long& a, long long& b) {
    std::istringstream ss(text);
    std::string rest;
    if (!(ss >> a >> b) || (ss >> rest) || a < 0 || b < 0)
      throw InputError("edge list: malformed line " + std::to_string(lineno) + ": '" + text + "'");
  };
  long long n = 0, m = 0;
  read_pair(lines[0], 1, n, m);
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw InputError("edge list: header promises " + std::to_string(m) + " edges, found " +
                     std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    long long u = 0, v = 0;
    read_pair(lines[i], i + 1, u, v);
    if (u >= n || v >= n)
      throw InputError("edge list: edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return build_graph(static_cast<std::uint32_t>(n), edges);
}

inline Graph read_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

/// graph6 decoder: N(n) prefix followed by the upper triangle, column by column,
/// packed big-endian six bits per byte with offset 63. Accepts an optional
/// ">>graph6<<" header and trailing newline.
inline Graph parse_graph6(std::string_view s) {
  constexpr std::string_view header = ">>graph6<<";
  if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  for (char c : s)
    if (c < 63 || c > 126) throw InputError("graph6: byte outside 63..126");
  if (s.empty()) throw InputError("graph6: empty string");

  auto take = [&](std::size_t count) {
    if (s.size() < count) throw InputError("graph6: truncated size field");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < count; ++i) v = (v << 6) | static_cast<std::uint64_t>(s[i] - 63);
    s.remove_prefix(count);
    return v;
  };
  std::uint64_t n = 0;
  if (s[0] != 126) {
    n = take(1);
  } else if (s.size() > 1 && s[1] != 126) {
    s.remove_prefix(1);
    n = take(3);
  } else {
    s.remove_prefix(std::min<std::size_t>(2, s.size()));
    n = take(6);
  }
  if (n > 4096) throw InputError("graph6: graph too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (s.size() != (bits + 5) / 6) throw InputError("graph6: wrong data length for n=" + std::to_string(n));
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = s[k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  for (; k < s.size() * 6; ++k)
    if (((s[k / 6] - 63) >> (5 - k % 6)) & 1) throw InputError("graph6: nonzero padding bits");
  return build_graph(static_cast<std::uint32_t>(n), edges);
}

inline std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  auto put = [&](std::uint64_t v, int groups) {
    for (int i = groups - 1; i >= 0; --i) out.push_back(static_cast<char>(63 + ((v >> (6 * i)) & 63)));
  };
  if (n <= 62) {
    put(n, 1);
  } else if (n <= 258047) {
    out.push_back(126);
    put(n, 3);
  } else {
    out.append(2, static_cast<char>(126));
    put(n, 6);
  }
  int acc = 0, used = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

}  // namespace pebbling
