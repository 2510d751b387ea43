#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "pebbling/bounds.hpp"

namespace pebbling {

inline constexpr int kReportSchema = 1;

inline const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::LessEqual: return "le";
    case Comparison::Less: return "lt";
    case Comparison::Sandwich: return "sandwich";
  }
  return "?";
}

/// One JSON object per report. Key order is fixed so identical runs produce
/// identical lines apart from elapsed_ms.
inline nlohmann::ordered_json to_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["bound_id"] = to_string(r.id);
  j["kind"] = is_conjecture(r.id) ? "conjecture" : "proven";
  auto inputs = nlohmann::ordered_json::array();
  for (const auto& g : r.inputs)
    inputs.push_back({{"name", g.name}, {"graph6", to_graph6(g.graph)}, {"order", g.graph.order()}});
  j["inputs"] = std::move(inputs);
  j["comparison"] = to_string(r.comparison);
  j["lhs"] = r.lhs;
  j["rhs_num"] = r.rhs.num();
  j["rhs_den"] = r.rhs.den();
  if (r.lower) j["lower"] = *r.lower;
  j["verdict"] = to_string(r.verdict);
  if (!r.reason.empty()) j["reason"] = r.reason;
  auto notes = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.notes) notes[k] = v;
  j["notes"] = std::move(notes);
  if (!r.witnesses.empty()) {
    auto ws = nlohmann::ordered_json::array();
    for (const auto& w : r.witnesses)
      ws.push_back({{"role", w.role}, {"root", w.root}, {"config", w.config.to_string()}});
    j["witness"] = std::move(ws);
  }
  j["elapsed_ms"] = static_cast<std::int64_t>(r.elapsed_ms + 0.5);
  return j;
}

inline void write_jsonl(std::ostream& os, const std::vector<BoundReport>& reports) {
  for (const auto& r : reports) os << to_json(r).dump() << '\n';
}

/// Problems with a parsed report line; empty when it is well formed.
inline std::vector<std::string> validate_report_line(const std::string& line) {
  std::vector<std::string> errs;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    return {std::string("not JSON: ") + e.what()};
  }
  if (!j.is_object()) return {"not an object"};
  auto need = [&](const char* key, auto pred, const char* what) {
    if (!j.contains(key)) errs.push_back(std::string("missing ") + key);
    else if (!pred(j[key])) errs.push_back(std::string(key) + " is not " + what);
  };
  auto is_int = [](const nlohmann::json& v) { return v.is_number_integer(); };
  auto is_str = [](const nlohmann::json& v) { return v.is_string(); };
  need("schema", [](const nlohmann::json& v) { return v.is_number_integer() && v.get<int>() == kReportSchema; },
       "1");
  need("bound_id", is_str, "a string");
  need("inputs", [](const nlohmann::json& v) { return v.is_array(); }, "an array");
  need("lhs", is_int, "an integer");
  need("rhs_num", is_int, "an integer");
  need("rhs_den", [](const nlohmann::json& v) { return v.is_number_integer() && v.get<std::int64_t>() > 0; },
       "a positive integer");
  need("verdict",
       [](const nlohmann::json& v) {
         return v.is_string() && (v == "holds" || v == "fails" || v == "skipped");
       },
       "holds/fails/skipped");
  need("elapsed_ms", is_int, "an integer");
  if (j.contains("verdict") && j["verdict"] == "skipped" && !j.contains("reason"))
    errs.push_back("skipped row without reason");
  if (j.contains("witness") && !j["witness"].is_array()) errs.push_back("witness is not an array");
  return errs;
}

struct SummaryRow {
  std::uint64_t instances = 0, holds = 0, fails = 0, skipped = 0;
  std::optional<Rational> max_ratio;  // lhs / rhs over evaluated rows with rhs > 0
};

inline std::map<std::string, SummaryRow> summarize(const std::vector<BoundReport>& reports) {
  std::map<std::string, SummaryRow> out;
  for (const auto& r : reports) {
    auto& row = out[to_string(r.id)];
    ++row.instances;
    switch (r.verdict) {
      case Verdict::Holds: ++row.holds; break;
      case Verdict::Fails: ++row.fails; break;
      case Verdict::Skipped: ++row.skipped; continue;
    }
    if (r.rhs.num() > 0) {
      Rational ratio(r.lhs * r.rhs.den(), r.rhs.num());
      if (!row.max_ratio || ratio > *row.max_ratio) row.max_ratio = ratio;
    }
  }
  return out;
}

inline void write_summary_csv(std::ostream& os, const std::vector<BoundReport>& reports) {
  os << "bound_id,instances,holds,fails,skipped,max_ratio\n";
  for (const auto& [id, row] : summarize(reports))
    os << id << ',' << row.instances << ',' << row.holds << ',' << row.fails << ',' << row.skipped << ','
       << (row.max_ratio ? row.max_ratio->to_string() : "") << '\n';
}

}  // namespace pebbling
