#pragma once

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pebbling/families.hpp"
#include "pebbling/graph_io.hpp"
#include "pebbling/numbers.hpp"
#include "pebbling/products.hpp"
#include "pebbling/report.hpp"
#include "pebbling/solve.hpp"
#include "pebbling/verify.hpp"

namespace pebbling::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kBudgetExceeded = 3, kInternalError = 4 };

namespace detail {

struct GraphSources {
  std::vector<std::string> families, edge_files, graph6;
  CLI::Option* family_opt = nullptr;
  CLI::Option* edges_opt = nullptr;
  CLI::Option* graph6_opt = nullptr;

  void attach(CLI::App& app) {
    family_opt = app.add_option("--family", families, "Named family, e.g. cycle:5, complete:4, petersen");
    edges_opt = app.add_option("--edges", edge_files, "Edge-list file ('n m' header, then 'u v' lines)");
    graph6_opt = app.add_option("--graph6", graph6, "graph6 string");
  }

  // Graphs in command-line order, whichever flags introduced them.
  std::vector<Graph> load(const CLI::App& app) const {
    std::vector<Graph> out;
    std::size_t fi = 0, ei = 0, gi = 0;
    for (const CLI::Option* opt : app.parse_order()) {
      if (opt == family_opt) {
        out.push_back(family(families.at(fi++)));
      } else if (opt == edges_opt) {
        const std::string& path = edge_files.at(ei++);
        std::ifstream in(path);
        if (!in) throw InputError("cannot open edge list '" + path + "'");
        out.push_back(read_edge_list(in));
      } else if (opt == graph6_opt) {
        out.push_back(parse_graph6(graph6.at(gi++)));
      }
    }
    return out;
  }

  Graph single(const CLI::App& app) const {
    auto gs = load(app);
    if (gs.size() != 1) throw InputError("expected exactly one graph source, got " + std::to_string(gs.size()));
    return gs.front();
  }
};

inline void print_result(std::ostream& out, const PebblingResult& r, bool json) {
  if (json) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["kind"] = to_string(r.kind, r.fold);
    j["value"] = r.value;
    j["root"] = r.root_attaining_max;
    j["witness_unsolvable"] = r.witness_unsolvable.to_string();
    j["nodes_expanded"] = r.stats.nodes_expanded;
    j["memo_hits"] = r.stats.memo_hits;
    out << j.dump() << '\n';
    return;
  }
  out << "kind: " << to_string(r.kind, r.fold) << '\n'
      << "value: " << r.value << '\n'
      << "root: " << r.root_attaining_max << '\n'
      << "witness_unsolvable: " << r.witness_unsolvable.to_string() << '\n'
      << "nodes_expanded: " << r.stats.nodes_expanded << '\n'
      << "memo_hits: " << r.stats.memo_hits << '\n';
}

inline NamedGraph named_family(const std::string& spec) { return {spec, family(spec)}; }

// "left/right", each side a family spec.
inline std::pair<NamedGraph, NamedGraph> parse_pair(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw InputError("pair '" + text + "' must look like family/family");
  return {named_family(text.substr(0, slash)), named_family(text.substr(slash + 1))};
}

inline ProductOp parse_op(const std::string& s) {
  if (s == "box") return ProductOp::Box;
  if (s == "strong") return ProductOp::Strong;
  if (s == "cross") return ProductOp::Cross;
  if (s == "corona") return ProductOp::Corona;
  throw InputError("unknown product '" + s + "' (box, strong, cross, corona)");
}

inline void write_product(std::ostream& out, const Graph& p) {
  write_edge_list(out, p);
  for (Vertex v = 0; v < p.order(); ++v) out << "# label " << v << ' ' << p.label(v).to_string() << '\n';
}

}  // namespace detail

/// Runs the `pebble` command line. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact graph pebbling numbers, solvability, products and bound verification", "pebble"};
  app.require_subcommand(1);

  std::uint64_t budget = NumberOptions{}.budget;
  bool json = false;

  // pi
  auto* pi_cmd = app.add_subcommand("pi", "Pebbling number, rooted or maximized over roots");
  detail::GraphSources pi_src;
  pi_src.attach(*pi_cmd);
  std::optional<Vertex> pi_root;
  Count pi_fold = 1;
  pi_cmd->add_option("--root", pi_root, "Root vertex (default: maximize over all roots)");
  pi_cmd->add_option("--fold", pi_fold, "Target pebbles on the root")->check(CLI::PositiveNumber);
  pi_cmd->add_option("--budget", budget, "Node expansion budget");
  pi_cmd->add_flag("--json", json, "Print one JSON object");

  // phi
  auto* phi_cmd = app.add_subcommand("phi", "Free-move pebbling number");
  detail::GraphSources phi_src;
  phi_src.attach(*phi_cmd);
  std::optional<Vertex> phi_root;
  phi_cmd->add_option("--root", phi_root, "Root vertex (default: maximize over all roots)");
  phi_cmd->add_option("--budget", budget, "Node expansion budget");
  phi_cmd->add_flag("--json", json, "Print one JSON object");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Decide whether a configuration reaches the root");
  detail::GraphSources solve_src;
  solve_src.attach(*solve_cmd);
  std::vector<std::string> config_tokens;
  Vertex solve_root = 0;
  Count solve_fold = 1;
  std::string variant = "standard";
  solve_cmd->add_option("--config", config_tokens, "Pebbles as v:c tokens")->required();
  solve_cmd->add_option("--root", solve_root, "Root vertex")->required();
  solve_cmd->add_option("--fold", solve_fold, "Target pebbles on the root")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--variant", variant, "standard or free")->check(CLI::IsMember({"standard", "free"}));
  solve_cmd->add_option("--budget", budget, "Node expansion budget");

  // product
  auto* product_cmd = app.add_subcommand("product", "Build G op H as an edge list with vertex labels");
  detail::GraphSources product_src;
  product_src.attach(*product_cmd);
  std::string op;
  std::string product_out;
  product_cmd->add_option("--op", op, "box, strong, cross or corona")->required();
  product_cmd->add_option("--out", product_out, "Output file (default: stdout)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check bounds over a graph corpus");
  std::string suite = "proven";
  VerifyOptions vo;
  std::string jsonl_out, summary_out;
  std::vector<std::string> pairs;
  verify_cmd->add_option("--suite", suite, "proven, conjectures or all")
      ->check(CLI::IsMember({"proven", "conjectures", "all"}));
  verify_cmd->add_option("--min-n", vo.corpus.min_vertices, "Smallest factor order");
  verify_cmd->add_option("--max-n", vo.corpus.max_vertices, "Largest factor order")->check(CLI::Range(1, 8));
  verify_cmd->add_option("--product-cap", vo.corpus.product_cap, "Largest product order computed");
  verify_cmd->add_option("--jobs", vo.jobs, "Worker threads (0: all cores)");
  verify_cmd->add_option("--budget", budget, "Node expansion budget per computation");
  verify_cmd->add_option("--pair", pairs, "Extra ordered pair as family/family, e.g. complete:2/path:4");
  verify_cmd->add_option("--out", jsonl_out, "JSONL report file (default: stdout)");
  verify_cmd->add_option("--summary", summary_out, "Summary CSV file (default: stderr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  NumberOptions nopts;
  nopts.budget = budget;

  try {
    if (*pi_cmd) {
      Graph g = pi_src.single(*pi_cmd);
      auto r = pi_root ? rooted_pebbling_number(g, *pi_root, pi_fold, nopts) : pebbling_number(g, pi_fold, nopts);
      detail::print_result(out, r, json);
    } else if (*phi_cmd) {
      Graph g = phi_src.single(*phi_cmd);
      auto r = phi_root ? rooted_phi(g, *phi_root, nopts) : phi(g, nopts);
      detail::print_result(out, r, json);
    } else if (*solve_cmd) {
      Graph g = solve_src.single(*solve_cmd);
      std::string text;
      for (const auto& t : config_tokens) text += t + ' ';
      const Configuration c = parse_configuration(text, g.order());
      SolverOptions so;
      so.budget = budget;
      so.witness = true;
      const auto v = variant == "free" ? Variant::FreeMove : Variant::Standard;
      auto res = is_solvable({g, solve_root, solve_fold, v}, c, so);
      out << (res.solvable ? "solvable" : "unsolvable") << '\n';
      if (res.witness) {
        out << "witness:";
        for (const Move& m : *res.witness) out << ' ' << to_string(m);
        out << '\n';
      }
      out << "nodes_expanded: " << res.stats.nodes_expanded << '\n';
    } else if (*product_cmd) {
      auto gs = product_src.load(*product_cmd);
      if (gs.size() != 2) throw InputError("product needs exactly two graph sources, got " + std::to_string(gs.size()));
      Graph p = product(detail::parse_op(op), gs[0], gs[1]);
      if (!is_connected(p)) err << "warning: product is not connected\n";
      if (product_out.empty()) {
        detail::write_product(out, p);
      } else {
        std::ofstream f(product_out);
        if (!f) throw InputError("cannot write '" + product_out + "'");
        detail::write_product(f, p);
      }
    } else if (*verify_cmd) {
      vo.suite = suite == "proven" ? Suite::Proven : suite == "conjectures" ? Suite::Conjectures : Suite::All;
      vo.numbers = nopts;
      for (const auto& p : pairs) vo.extra_pairs.push_back(detail::parse_pair(p));
      const auto reports = run_verify(vo);
      if (jsonl_out.empty()) {
        write_jsonl(out, reports);
      } else {
        std::ofstream f(jsonl_out);
        if (!f) throw InputError("cannot write '" + jsonl_out + "'");
        write_jsonl(f, reports);
      }
      if (summary_out.empty()) {
        write_summary_csv(err, reports);
      } else {
        std::ofstream f(summary_out);
        if (!f) throw InputError("cannot write '" + summary_out + "'");
        write_summary_csv(f, reports);
      }
      const auto bad = proven_failures(reports);
      if (!bad.empty()) {
        err << "error: " << bad.size() << " proven bound(s) failed\n";
        return kInternalError;
      }
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: value in [" << e.lower() << ", " << e.upper() << "]\n";
    return kBudgetExceeded;
  } catch (const CapExceeded& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const DisconnectedError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kOk;
}

}  // namespace pebbling::cli
