#pragma once

#include <charconv>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pebbling/graph.hpp"

namespace pebbling {

using Count = std::uint32_t;

/// Pebble counts per vertex.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::uint32_t n) : counts_(n, 0) {}
  explicit Configuration(std::vector<Count> counts) : counts_(std::move(counts)) {}

  std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(counts_.size()); }
  /// |C|, the total number of pebbles.
  std::uint64_t size() const { return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0}); }

  Count operator[](Vertex v) const { return counts_.at(v); }
  Count& operator[](Vertex v) { return counts_.at(v); }
  const std::vector<Count>& counts() const noexcept { return counts_; }

  /// "v:count" pairs for the non-zero vertices, in vertex order.
  std::string to_string() const {
    std::string out;
    for (Vertex v = 0; v < order(); ++v) {
      if (counts_[v] == 0) continue;
      if (!out.empty()) out += ' ';
      out += std::to_string(v) + ':' + std::to_string(counts_[v]);
    }
    return out;
  }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<Count> counts_;
};

/// Parses whitespace-separated "v:count" pairs; omitted vertices are zero and a
/// repeated vertex accumulates.
inline Configuration parse_configuration(std::string_view text, std::uint32_t n) {
  Configuration c(n);
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    auto colon = tok.find(':');
    auto bad = [&] { return InputError("configuration: malformed token '" + tok + "' (expected v:count)"); };
    if (colon == std::string::npos) throw bad();
    std::uint64_t v = 0, k = 0;
    auto r1 = std::from_chars(tok.data(), tok.data() + colon, v);
    auto r2 = std::from_chars(tok.data() + colon + 1, tok.data() + tok.size(), k);
    if (r1.ec != std::errc() || r1.ptr != tok.data() + colon || r2.ec != std::errc() ||
        r2.ptr != tok.data() + tok.size() || colon == 0)
      throw bad();
    if (v >= n) throw InputError("configuration: vertex " + std::to_string(v) + " out of range");
    if (k > 1'000'000) throw InputError("configuration: count too large");
    c[static_cast<Vertex>(v)] += static_cast<Count>(k);
  }
  return c;
}

enum class MoveKind { Paid, Free };

struct Move {
  Vertex from = 0;
  Vertex to = 0;
  MoveKind kind = MoveKind::Paid;

  friend bool operator==(const Move&, const Move&) = default;
};

inline std::string to_string(const Move& m) {
  return std::to_string(m.from) + (m.kind == MoveKind::Paid ? "->" : "~>") + std::to_string(m.to);
}

/// Replays a move sequence. Free moves must all precede paid moves and each moves one
/// original pebble (at most as many free moves leave a vertex as it held initially).
/// Returns the final configuration, or throws InputError naming the illegal step.
inline Configuration replay(const Graph& g, const Configuration& start, const std::vector<Move>& moves) {
  if (start.order() != g.order()) throw InputError("replay: configuration length mismatch");
  Configuration cur = start;
  Configuration moved_free(g.order());
  bool paid_seen = false;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const Move& m = moves[i];
    auto fail = [&](const std::string& why) {
      return InputError("replay: step " + std::to_string(i) + " (" + to_string(m) + ") " + why);
    };
    if (!g.adjacent(m.from, m.to)) throw fail("is not along an edge");
    if (m.kind == MoveKind::Free) {
      if (paid_seen) throw fail("free move after a paid move");
      if (moved_free[m.from] + 1 > start[m.from]) throw fail("moves more pebbles freely than the vertex held");
      ++moved_free[m.from];
    } else {
      paid_seen = true;
    }
    const Count need = m.kind == MoveKind::Paid ? 2 : 1;
    if (cur[m.from] < need) throw fail("source has too few pebbles");
    cur[m.from] -= need;
    cur[m.to] += 1;
  }
  return cur;
}

}  // namespace pebbling
