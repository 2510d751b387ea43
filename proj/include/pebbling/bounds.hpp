#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pebbling/canonical.hpp"
#include "pebbling/corpus.hpp"
#include "pebbling/numbers.hpp"
#include "pebbling/products.hpp"
#include "pebbling/rational.hpp"

namespace pebbling {

enum class BoundId {
  Fact1,
  SpanningMonotone,
  BoxGraham,
  BoxThm,
  BoxProp,
  BoxFrugal,
  BoxPower,
  PhiLemma,
  StrongThm,
  StrongProp,
  StrongConj,
  CrossK2Lemma,
  CrossThm,
  CrossCor,
  CrossConj,
  CoronaThm,
  CoronaLemma2k,
  CoronaLemma42,
  CoronaLemma2pig,
};

inline constexpr BoundId kAllBoundIds[] = {
    BoundId::Fact1,        BoundId::SpanningMonotone, BoundId::BoxGraham,     BoundId::BoxThm,
    BoundId::BoxProp,      BoundId::BoxFrugal,        BoundId::BoxPower,      BoundId::PhiLemma,
    BoundId::StrongThm,    BoundId::StrongProp,       BoundId::StrongConj,    BoundId::CrossK2Lemma,
    BoundId::CrossThm,     BoundId::CrossCor,         BoundId::CrossConj,     BoundId::CoronaThm,
    BoundId::CoronaLemma2k, BoundId::CoronaLemma42,   BoundId::CoronaLemma2pig,
};

inline const char* to_string(BoundId id) {
  switch (id) {
    case BoundId::Fact1: return "fact1";
    case BoundId::SpanningMonotone: return "spanning_monotone";
    case BoundId::BoxGraham: return "box_graham";
    case BoundId::BoxThm: return "box_thm";
    case BoundId::BoxProp: return "box_prop";
    case BoundId::BoxFrugal: return "box_frugal";
    case BoundId::BoxPower: return "box_power";
    case BoundId::PhiLemma: return "phi_lemma";
    case BoundId::StrongThm: return "strong_thm";
    case BoundId::StrongProp: return "strong_prop";
    case BoundId::StrongConj: return "strong_conj";
    case BoundId::CrossK2Lemma: return "cross_k2_lemma";
    case BoundId::CrossThm: return "cross_thm";
    case BoundId::CrossCor: return "cross_cor";
    case BoundId::CrossConj: return "cross_conj";
    case BoundId::CoronaThm: return "corona_thm";
    case BoundId::CoronaLemma2k: return "corona_lemma_2k";
    case BoundId::CoronaLemma42: return "corona_lemma_42";
    case BoundId::CoronaLemma2pig: return "corona_lemma_2pig";
  }
  return "?";
}

/// Open conjectures: a failing instance is a finding, not a defect.
inline bool is_conjecture(BoundId id) {
  return id == BoundId::BoxGraham || id == BoundId::StrongConj || id == BoundId::CrossConj;
}

enum class Comparison {
  LessEqual,  // lhs <= rhs
  Less,       // lhs < rhs
  Sandwich,   // lower <= lhs <= rhs
};

enum class Verdict { Holds, Fails, Skipped };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

struct Witness {
  std::string role;  // which graph / which configuration family it belongs to
  Vertex root = 0;
  Configuration config;
};

/// One evaluated instance of one inequality.
struct BoundReport {
  BoundId id = BoundId::Fact1;
  std::vector<NamedGraph> inputs;
  std::int64_t lhs = 0;
  Rational rhs;
  std::optional<std::int64_t> lower;
  Comparison comparison = Comparison::LessEqual;
  Verdict verdict = Verdict::Skipped;
  std::string reason;
  std::vector<std::pair<std::string, std::string>> notes;
  std::vector<Witness> witnesses;
  double elapsed_ms = 0;
};

inline bool compare_holds(Comparison c, std::int64_t lhs, const Rational& rhs, std::optional<std::int64_t> lower) {
  switch (c) {
    case Comparison::LessEqual: return Rational(lhs) <= rhs;
    case Comparison::Less: return Rational(lhs) < rhs;
    case Comparison::Sandwich: return lower.value_or(lhs) <= lhs && Rational(lhs) <= rhs;
  }
  return false;
}

struct BoundsConfig {
  NumberOptions numbers;
  /// Graphs larger than this are never handed to the number computations.
  std::uint64_t product_cap = 12;
};

/// Thread-safe memo of π, π_k and φ by isomorphism class. Values are computed outside
/// the lock; a race at worst computes the same value twice.
class Evaluator {
 public:
  explicit Evaluator(BoundsConfig cfg = {}) : cfg_(cfg) {}

  const BoundsConfig& config() const noexcept { return cfg_; }

  PebblingResult pi(const Graph& g, Count fold = 1) {
    return cached(std::tuple(0, fold, key(g)), [&] { return pebbling_number(g.bare(), fold, cfg_.numbers); });
  }
  PebblingResult phi(const Graph& g) {
    return cached(std::tuple(1, Count{1}, key(g)), [&] { return pebbling::phi(g.bare(), cfg_.numbers); });
  }

  /// Throws CapExceeded when g is above the product cap.
  void admit(const Graph& g) const {
    if (g.order() > cfg_.product_cap)
      throw CapExceeded("graph order " + std::to_string(g.order()) + " exceeds product cap " +
                        std::to_string(cfg_.product_cap));
  }

 private:
  using Key = std::tuple<int, Count, std::string>;

  static std::string key(const Graph& g) {
    return g.order() <= kDefaultCanonicalCap ? canonical_form(g) : "raw:" + to_graph6(g);
  }

  template <class Compute>
  PebblingResult cached(const Key& k, Compute&& compute) {
    {
      std::lock_guard lock(mu_);
      if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    }
    PebblingResult r = compute();
    std::lock_guard lock(mu_);
    return memo_.try_emplace(k, std::move(r)).first->second;
  }

  BoundsConfig cfg_;
  std::mutex mu_;
  std::map<Key, PebblingResult> memo_;
};

namespace detail {

struct Precondition {
  std::string reason;
};

// Runs `body` against a fresh report; budget, cap and precondition failures become
// skipped rows. The verdict is derived from the filled-in comparison.
template <class Body>
BoundReport run_check(BoundId id, std::vector<NamedGraph> inputs, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  BoundReport r;
  r.id = id;
  r.inputs = std::move(inputs);
  try {
    body(r);
    r.verdict = compare_holds(r.comparison, r.lhs, r.rhs, r.lower) ? Verdict::Holds : Verdict::Fails;
  } catch (const Precondition& p) {
    r.verdict = Verdict::Skipped;
    r.reason = "precondition: " + p.reason;
  } catch (const BudgetExceeded& e) {
    r.verdict = Verdict::Skipped;
    r.reason = std::string("budget: ") + e.what();
  } catch (const CapExceeded& e) {
    r.verdict = Verdict::Skipped;
    r.reason = std::string("cap: ") + e.what();
  } catch (const DisconnectedError&) {
    r.verdict = Verdict::Skipped;
    r.reason = "precondition: graph is not connected";
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline void require(bool ok, const std::string& reason) {
  if (!ok) throw Precondition{reason};
}

inline void require_connected_factors(std::initializer_list<const NamedGraph*> gs) {
  for (const NamedGraph* g : gs) require(is_connected(g->graph) && g->graph.order() > 0, g->name + " is not connected");
}

inline std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

inline void add_witness(BoundReport& r, const std::string& role, const PebblingResult& res) {
  r.witnesses.push_back({role, res.root_attaining_max, res.witness_unsolvable});
}

// Every configuration with `total` pebbles on `support`, in lexicographic order.
template <class Visit>
void for_each_distribution(const std::vector<Vertex>& support, std::uint32_t n, Count total, Visit&& visit) {
  std::vector<Count> c(n, 0);
  auto rec = [&](auto& self, std::size_t i, Count left) -> void {
    if (i + 1 == support.size()) {
      c[support[i]] = left;
      visit(c);
      c[support[i]] = 0;
      return;
    }
    for (Count x = left + 1; x-- > 0;) {
      c[support[i]] = x;
      self(self, i + 1, left - x);
    }
    c[support[i]] = 0;
  };
  if (support.empty()) {
    if (total == 0) visit(c);
    return;
  }
  rec(rec, 0, total);
}

}  // namespace detail

// ---- Fact 1 and spanning subgraphs ------------------------------------------------

/// |G| <= π(G), 2^diam(G) <= π(G), π(G) <= 2^{|G|-1}, with sharpness notes.
inline BoundReport check_fact1(Evaluator& ev, const NamedGraph& g) {
  return detail::run_check(BoundId::Fact1, {g}, [&](BoundReport& r) {
    detail::require_connected_factors({&g});
    ev.admit(g.graph);
    const auto pi = ev.pi(g.graph);
    const std::uint64_t n = g.graph.order();
    const std::uint64_t by_diameter = std::uint64_t{1} << diameter(g.graph);
    r.comparison = Comparison::Sandwich;
    r.lhs = detail::as_int(pi.value);
    r.lower = detail::as_int(std::max(n, by_diameter));
    r.rhs = detail::as_int(std::uint64_t{1} << (n - 1));
    r.notes = {{"pi", std::to_string(pi.value)},
               {"order_bound", std::to_string(n)},
               {"diameter_bound", std::to_string(by_diameter)},
               {"sharp_order", pi.value == n ? "true" : "false"},
               {"sharp_diameter", pi.value == by_diameter ? "true" : "false"},
               {"sharp_upper", pi.value == (std::uint64_t{1} << (n - 1)) ? "true" : "false"}};
    detail::add_witness(r, "G", pi);
  });
}

/// π(G) <= π(G - e) for every edge e whose deletion keeps G connected.
inline BoundReport check_spanning_monotone(Evaluator& ev, const NamedGraph& g) {
  return detail::run_check(BoundId::SpanningMonotone, {g}, [&](BoundReport& r) {
    detail::require_connected_factors({&g});
    ev.admit(g.graph);
    std::vector<Graph> subs;
    for (const Edge& e : g.graph.edges()) {
      Graph s = without_edge(g.graph, e);
      if (is_connected(s)) subs.push_back(std::move(s));
    }
    detail::require(!subs.empty(), "every edge is a bridge");
    const auto pi = ev.pi(g.graph);
    std::optional<PebblingResult> weakest;
    std::string weakest_code;
    for (const Graph& s : subs) {
      auto v = ev.pi(s);
      if (!weakest || v.value < weakest->value) {
        weakest = v;
        weakest_code = to_graph6(s);
      }
    }
    r.lhs = detail::as_int(pi.value);
    r.rhs = detail::as_int(weakest->value);
    r.notes = {{"subgraphs", std::to_string(subs.size())}, {"min_subgraph", weakest_code}};
    detail::add_witness(r, "G", pi);
  });
}

// ---- Box products -----------------------------------------------------------------

/// Graham's conjecture: π(G□H) <= π(G)π(H).
inline BoundReport check_box_graham(Evaluator& ev, const NamedGraph& g, const NamedGraph& h) {
  return detail::run_check(BoundId::BoxGraham, {g, h}, [&](BoundReport& r) {
    detail::require_connected_factors({&g, &h});
    Graph p = box_product(g.graph, h.graph);
    ev.admit(p);
    const auto lhs = ev.pi(p);
    r.lhs = detail::as_int(lhs.value);
    r.rhs = detail::as_int(ev.pi(g.graph).value * ev.pi(h.graph).value);
    detail::add_witness(r, "box", lhs);
  });
}

/// π(G□H) <= 2π(G)π(H).
inline BoundReport check_box_thm(Evaluator& ev, const NamedGraph& g, const NamedGraph& h) {
  return detail::run_check(BoundId::BoxThm, {g, h}, [&](BoundReport& r) {
    detail::require_connected_factors({&g, &h});
    Graph p = box_product(g.graph, h.graph);
    ev.admit(p);
    const auto lhs = ev.pi(p);
    r.lhs = detail::as_int(lhs.value);
    r.rhs = detail::as_int(2 * ev.pi(g.graph).value * ev.pi(h.graph).value);
    detail::add_witness(r, "box", lhs);
  });
}

/// π(G□H) <= (π(G)+|G|)π(H).
inline BoundReport check_box_prop(Evaluator& ev, const NamedGraph& g, const NamedGraph& h) {
  return detail::run_check(BoundId::BoxProp, {g, h}, [&](BoundReport& r) {
    detail::require_connected_factors({&g, &h});
    Graph p = box_product(g.graph, h.graph);
    ev.admit(p);
    const auto lhs = ev.pi(p);
    r.lhs = detail::as_int(lhs.value);
    r.rhs = detail::as_int((ev.pi(g.graph).value + g.graph.order()) * ev.pi(h.graph).value);
    detail::add_witness(r, "box", lhs);
  });
}

/// π(G□H) <= 2^diam(H) π(G) + |G|π(H), assuming H frugal. Frugality is only
/// checked up to fold `max_fold` (0 means π(G)+1), and the row says so.
inline BoundReport check_box_frugal(Evaluator& ev, const NamedGraph& g, const NamedGraph& h, Count max_fold = 0) {
  return detail::run_check(BoundId::BoxFrugal, {g, h}, [&](BoundReport& r) {
    detail::require_connected_factors({&g, &h});
    Graph p = box_product(g.graph, h.graph);
    ev.admit(p);
    const std::uint64_t pi_g = ev.pi(g.graph).value;
    const std::uint64_t pi_h = ev.pi(h.graph).value;
    const Count k_max = max_fold != 0 ? max_fold : static_cast<Count>(pi_g + 1);
    const std::uint64_t spread = std::uint64_t{1} << diameter(h.graph);
    for (Count k = 2; k <= k_max; ++k) {
      const std::uint64_t pi_k = ev.pi(h.graph, k).value;
      detail::require(pi_k <= pi_h + (k - 1) * spread,
                      h.name + " fails the frugality inequality at fold " + std::to_string(k));
    }
    const auto lhs = ev.pi(p);
    r.lhs = detail::as_int(lhs.value);
    const std::uint64_t rhs = spread * pi_g + g.graph.order() * pi_h;
    const std::uint64_t prop = (pi_g + g.graph.order()) * pi_h;
    r.rhs = detail::as_int(rhs);
    r.notes = {{"conditional", "H frugal up to fold " + std::to_string(k_max) + "; unverified beyond"},
               {"frugal_up_to", std::to_string(k_max)},
               {"box_prop_rhs", std::to_string(prop)},
               {"tighter_of_two", rhs <= prop ? "box_frugal" : "box_prop"}};
    detail::add_witness(r, "box", lhs);
  });
}

/// π(G^{□k}) < (π(G)+|G|)^k.
inline BoundReport check_box_power(Evaluator& ev, const NamedGraph& g, unsigned k) {
  return detail::run_check(BoundId::BoxPower, {g}, [&](BoundReport& r) {
    detail::require_connected_factors({&g});
    detail::require(k >= 1, "power must be positive");
    std::uint64_t order = 1;
    for (unsigned i = 0; i < k; ++i) order *= g.graph.order();
    if (order > ev.config().product_cap) throw CapExceeded("power order exceeds product cap");
    Graph p = box_power(g.graph, k);
    const auto lhs = ev.pi(p);
    Rational rhs = 1;
    const Rational base = detail::as_int(ev.pi(g.graph).value + g.graph.order());
    for (unsigned i = 0; i < k; ++i) rhs = rhs * base;
    r.comparison = Comparison::Less;
    r.lhs = detail::as_int(lhs.value);
    r.rhs = rhs;
    r.notes = {{"k", std::to_string(k)}};
    detail::add_witness(r, "power", lhs);
  });
}

// ---- Free moves and strong products -----------------------------------------------

/// φ(G) <= ⌈π(G)/2⌉.
inline BoundReport check_phi_lemma(Evaluator& ev, const NamedGraph& g) {
  return detail::run_check(BoundId::PhiLemma, {g}, [&](BoundReport& r) {
    detail::require_connected_factors({&g});
    ev.admit(g.graph);
    const auto f = ev.phi(g.graph);
    const auto pi = ev.pi(g.graph);
    r.lhs = detail::as_int(f.value);
    r.rhs = Rational(detail::as_int(pi.value), 2).ceil();
    r.notes = {{"pi", std::to_string(pi.value)}};
    detail::add_witness(r, "phi", f);
  });
}

/// π(G⊠H) <= 3/2 (π(G)+1)(π(H)+1).
inline BoundReport check_strong_thm(Evaluator& ev, const NamedGraph& g, const NamedGraph& h) {
  return detail::run_check(BoundId::StrongThm, {g, h}, [&](BoundReport& r) {
    detail::require_connected_factors({&g, &h});
    Graph p = strong_product(g.graph, h.graph);
    ev.admit(p);
    const auto lhs = ev.pi(p);
    r.lhs = detail::as_int(lhs.value);
    r.rhs = Rational(detail::as_int(3 * (ev.pi(g.graph).value + 1) * (ev.pi(h.graph).value + 1)), 2);
    detail::add_witness(r, "strong", lhs);
  });
}

/// π(G⊠H) <= 1/2 (π(G)+2|G|+1)(π(H)+1).
inline BoundReport check_strong_prop(Evaluator& ev, const NamedGraph& g, const NamedGraph& h) {
  return detail::run_check(BoundId::StrongProp, {g, h}, [&](BoundReport& r) {
    detail::require_connected_factors({&g, &h});
    Graph p = strong_product(g.graph, h.graph);
    ev.admit(p);
    const auto lhs = ev.pi(p);
    r.lhs = detail::as_int(lhs.value);
    r.rhs = Rational(
        detail::as_int((ev.pi(g.graph).value + 2 * g.graph.order() + 1) * (ev.pi(h.graph).value + 1)), 2);
    detail::add_witness(r, "strong", lhs);
  });
}

/// Conjecture: π(G⊠H) <= max{π(G)π(H)/2, |G||H|} + 2.
inline BoundReport check_strong_conj(Evaluator& ev, const NamedGraph& g, const NamedGraph& h) {
  return detail::run_check(BoundId::StrongConj, {g, h}, [&](BoundReport& r) {
    detail::require_connected_factors({&g, &h});
    Graph p = strong_product(g.graph, h.graph);
    ev.admit(p);
    const auto lhs = ev.pi(p);
    const Rational half_product(detail::as_int(ev.pi(g.graph).value * ev.pi(h.graph).value), 2);
    const Rational orders = detail::as_int(std::uint64_t{g.graph.order()} * h.graph.order());
    r.lhs = detail::as_int(lhs.value);
    r.rhs = std::max(half_product, orders) + 2;
    detail::add_witness(r, "strong", lhs);
  });
}

// ---- Cross products ---------------------------------------------------------------

/// π(K₂×H) <= 2π(H')² for nonbipartite H and a connected spanning bipartite H'.
inline BoundReport check_cross_k2_lemma(Evaluator& ev, const NamedGraph& h, BipartiteStrategy strategy) {
  return detail::run_check(BoundId::CrossK2Lemma, {h}, [&](BoundReport& r) {
    r.notes = {{"strategy", to_string(strategy)}};
    detail::require_connected_factors({&h});
    detail::require(!is_bipartite(h.graph).bipartite, "H must be nonbipartite");
    Graph p = cross_product(complete_graph(2), h.graph);
    ev.admit(p);
    const Graph hb = spanning_bipartite_subgraph(h.graph, strategy);
    const auto lhs = ev.pi(p);
    const std::uint64_t pi_hb = ev.pi(hb).value;
    r.lhs = detail::as_int(lhs.value);
    r.rhs = detail::as_int(2 * pi_hb * pi_hb);
    r.notes.emplace_back("H_prime", to_graph6(hb));
    r.notes.emplace_back("pi_H_prime", std::to_string(pi_hb));
    detail::add_witness(r, "cross", lhs);
  });
}

/// π(G×H) <= 2(π(G')+|G|)π(H')², plus the corollary π(G×H) <= 4π(G')π(H')².
/// G must not be K₁ and H must be nonbipartite. Returns {theorem, corollary}.
inline std::vector<BoundReport> check_cross_thm(Evaluator& ev, const NamedGraph& g, const NamedGraph& h,
                                                BipartiteStrategy strategy_g, BipartiteStrategy strategy_h) {
  std::optional<std::uint64_t> pi_gb, pi_hb;
  auto body = [&](BoundReport& r, bool corollary) {
    r.notes = {{"strategy_G", to_string(strategy_g)}, {"strategy_H", to_string(strategy_h)}};
    detail::require_connected_factors({&g, &h});
    detail::require(g.graph.order() >= 2, "G must not be K1");
    detail::require(!is_bipartite(h.graph).bipartite, "H must be nonbipartite");
    Graph p = cross_product(g.graph, h.graph);
    ev.admit(p);
    const Graph gb = spanning_bipartite_subgraph(g.graph, strategy_g);
    const Graph hb = spanning_bipartite_subgraph(h.graph, strategy_h);
    const auto lhs = ev.pi(p);
    const std::uint64_t a = ev.pi(gb).value;
    const std::uint64_t b = ev.pi(hb).value;
    r.lhs = detail::as_int(lhs.value);
    r.rhs = corollary ? detail::as_int(4 * a * b * b) : detail::as_int(2 * (a + g.graph.order()) * b * b);
    r.notes.emplace_back("pi_G_prime", std::to_string(a));
    r.notes.emplace_back("pi_H_prime", std::to_string(b));
    detail::add_witness(r, "cross", lhs);
  };
  return {detail::run_check(BoundId::CrossThm, {g, h}, [&](BoundReport& r) { body(r, false); }),
          detail::run_check(BoundId::CrossCor, {g, h}, [&](BoundReport& r) { body(r, true); })};
}

/// Conjecture: π(G×H) <= 9/16 π(G)π(H)².
inline BoundReport check_cross_conj(Evaluator& ev, const NamedGraph& g, const NamedGraph& h) {
  return detail::run_check(BoundId::CrossConj, {g, h}, [&](BoundReport& r) {
    detail::require_connected_factors({&g, &h});
    detail::require(g.graph.order() >= 2, "G must not be K1");
    detail::require(!is_bipartite(h.graph).bipartite, "H must be nonbipartite");
    Graph p = cross_product(g.graph, h.graph);
    ev.admit(p);
    const auto lhs = ev.pi(p);
    const std::uint64_t a = ev.pi(g.graph).value;
    const std::uint64_t b = ev.pi(h.graph).value;
    r.lhs = detail::as_int(lhs.value);
    r.rhs = Rational(detail::as_int(9 * a * b * b), 16);
    detail::add_witness(r, "cross", lhs);
  });
}

// ---- Coronas ----------------------------------------------------------------------

/// π(G⋈H) <= |G||H| + 4π(G).
inline BoundReport check_corona_thm(Evaluator& ev, const NamedGraph& g, const NamedGraph& h) {
  return detail::run_check(BoundId::CoronaThm, {g, h}, [&](BoundReport& r) {
    detail::require_connected_factors({&g});
    Graph p = corona(g.graph, h.graph);
    ev.admit(p);
    const auto lhs = ev.pi(p);
    r.lhs = detail::as_int(lhs.value);
    r.rhs = detail::as_int(std::uint64_t{g.graph.order()} * h.graph.order() + 4 * ev.pi(g.graph).value);
    detail::add_witness(r, "corona", lhs);
  });
}

/// |H|+2k-1 pebbles anywhere on copy H^base move k pebbles onto base. Exhaustive;
/// lhs counts failing configurations and must be 0.
inline BoundReport check_corona_lemma_2k(Evaluator& ev, const NamedGraph& g, const NamedGraph& h, Vertex base,
                                         Count k) {
  return detail::run_check(BoundId::CoronaLemma2k, {g, h}, [&](BoundReport& r) {
    detail::require_connected_factors({&g});
    detail::require(base < g.graph.order(), "copy index out of range");
    detail::require(k >= 1 && h.graph.order() >= 1, "needs k >= 1 and non-empty H");
    Graph p = corona(g.graph, h.graph);
    ev.admit(p);
    Solver solver(p, base, k, {ev.config().numbers.config_cap, ev.config().numbers.budget, false});
    const auto copy = corona_copy(p, base);
    std::uint64_t checked = 0, failed = 0;
    detail::for_each_distribution(copy, p.order(), h.graph.order() + 2 * k - 1, [&](const std::vector<Count>& c) {
      ++checked;
      if (!solver.solvable(c)) {
        if (failed++ == 0) r.witnesses.push_back({"unsolved", base, Configuration(c)});
      }
    });
    r.lhs = detail::as_int(failed);
    r.rhs = 0;
    r.notes = {{"copy", std::to_string(base)}, {"k", std::to_string(k)}, {"configurations", std::to_string(checked)}};
  });
}

/// Root r in a copy H^v: 4 pebbles on one vertex of H^v, or 2 pebbles on each of two
/// distinct vertices of H^v, solve r. lhs counts failing placements.
inline BoundReport check_corona_lemma_42(Evaluator& ev, const NamedGraph& g, const NamedGraph& h, Vertex root) {
  return detail::run_check(BoundId::CoronaLemma42, {g, h}, [&](BoundReport& r) {
    detail::require_connected_factors({&g});
    Graph p = corona(g.graph, h.graph);
    ev.admit(p);
    detail::require(root >= g.graph.order() && root < p.order(), "root must lie in a copy of H");
    const Vertex base = (root - g.graph.order()) / h.graph.order();
    const auto copy = corona_copy(p, base);
    Solver solver(p, root, 1, {ev.config().numbers.config_cap, ev.config().numbers.budget, false});
    std::uint64_t checked = 0, failed = 0;
    auto test = [&](std::vector<Count> c) {
      ++checked;
      if (!solver.solvable(c) && failed++ == 0) r.witnesses.push_back({"unsolved", root, Configuration(c)});
    };
    for (std::size_t i = 0; i < copy.size(); ++i) {
      std::vector<Count> c(p.order(), 0);
      c[copy[i]] = 4;
      test(c);
      for (std::size_t j = i + 1; j < copy.size(); ++j) {
        std::vector<Count> d(p.order(), 0);
        d[copy[i]] = 2;
        d[copy[j]] = 2;
        test(d);
      }
    }
    r.lhs = detail::as_int(failed);
    r.rhs = 0;
    r.notes = {{"root", std::to_string(root)}, {"configurations", std::to_string(checked)}};
  });
}

/// 2π(G) pebbles on base vertices solve every root of G⋈H; and for a root in H^v,
/// π(G)+1 pebbles on base vertices with at least one on v solve it. Exhaustive.
inline BoundReport check_corona_lemma_2pig(Evaluator& ev, const NamedGraph& g, const NamedGraph& h) {
  return detail::run_check(BoundId::CoronaLemma2pig, {g, h}, [&](BoundReport& r) {
    detail::require_connected_factors({&g});
    Graph p = corona(g.graph, h.graph);
    ev.admit(p);
    const std::uint64_t pi_g = ev.pi(g.graph).value;
    std::vector<Vertex> base_vertices(g.graph.order());
    for (Vertex v = 0; v < g.graph.order(); ++v) base_vertices[v] = v;
    std::uint64_t checked = 0, failed = 0;
    for (Vertex root = 0; root < p.order(); ++root) {
      Solver solver(p, root, 1, {ev.config().numbers.config_cap, ev.config().numbers.budget, false});
      auto test = [&](const std::vector<Count>& c, const char* role) {
        ++checked;
        if (!solver.solvable(c) && failed++ == 0) r.witnesses.push_back({role, root, Configuration(c)});
      };
      detail::for_each_distribution(base_vertices, p.order(), static_cast<Count>(2 * pi_g),
                                    [&](const std::vector<Count>& c) { test(c, "unsolved_2pi"); });
      if (root >= g.graph.order()) {
        const Vertex hub = (root - g.graph.order()) / h.graph.order();
        detail::for_each_distribution(base_vertices, p.order(), static_cast<Count>(pi_g + 1),
                                      [&](const std::vector<Count>& c) {
                                        if (c[hub] >= 1) test(c, "unsolved_pi_plus_1");
                                      });
      }
    }
    r.lhs = detail::as_int(failed);
    r.rhs = 0;
    r.notes = {{"pi_G", std::to_string(pi_g)}, {"configurations", std::to_string(checked)}};
  });
}

}  // namespace pebbling
