// JSON and text renderings of check reports.

#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "dq/nqueens.hpp"
#include "dq/printer.hpp"
#include "dq/run_config.hpp"
#include "dq/universe.hpp"
#include "dq/verifier.hpp"

namespace dq {

// Verdicts hold for the bounded instance space only.
inline std::string verdict_label(CheckVerdict v) {
  return v == CheckVerdict::Inconclusive ? "inconclusive" : to_string(v) + " (bounded)";
}

inline nlohmann::ordered_json report_json(const CheckReport& r, const nlohmann::ordered_json& config = nullptr) {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(r.verdict);
  j["verdict_label"] = verdict_label(r.verdict);
  j["check"] = r.check;
  j["subject"] = r.subject;
  j["bounds"] = detail::bounds_to_json(r.bounds_used);
  if (r.witness_bounds) j["witness_bounds"] = detail::bounds_to_json(*r.witness_bounds);
  j["instances_checked"] = r.instances_checked;
  j["instances_checked_saturated"] = r.instances_checked == kCountMax;  // counts saturate at 2^64-1
  j["counterexample_total"] = r.counterexample_total;
  nlohmann::ordered_json cex = nlohmann::ordered_json::array();
  for (const Counterexample& c : r.counterexamples) {
    cex.push_back({{"clause_text", c.text}, {"reason", c.reason}, {"component", c.component}});
  }
  j["counterexamples"] = cex;
  nlohmann::ordered_json comps = nlohmann::ordered_json::array();
  for (const CheckComponent& c : r.components) {
    comps.push_back({{"name", c.name},
                     {"verdict", to_string(c.verdict)},
                     {"instances_checked", c.instances_checked},
                     {"counterexample_total", c.counterexample_total}});
  }
  j["components"] = comps;
  j["notes"] = r.notes;
  if (!config.is_null()) j["config"] = config;
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

inline std::string report_text(const CheckReport& r) {
  std::ostringstream out;
  out << r.check << " [" << r.subject << "]: " << verdict_label(r.verdict) << "\n";
  out << "  bounds: N=" << r.bounds_used.max_numeral << " L=" << r.bounds_used.max_list_len;
  if (r.witness_bounds) out << "  witness bounds: N=" << r.witness_bounds->max_numeral << " L=" << r.witness_bounds->max_list_len;
  out << "\n  instances checked: " << r.instances_checked << (r.instances_checked == kCountMax ? " (saturated)" : "") << "\n";
  for (const CheckComponent& c : r.components) {
    out << "  " << c.name << ": " << to_string(c.verdict) << ", " << c.instances_checked << " instances, "
        << c.counterexample_total << " counterexamples\n";
  }
  if (r.counterexample_total > 0) {
    out << "  counterexamples (" << r.counterexamples.size() << " of " << r.counterexample_total << " shown):\n";
    for (const Counterexample& c : r.counterexamples) out << "    " << c.text << "    % " << c.reason << "\n";
  }
  for (const std::string& n : r.notes) out << "  note: " << n << "\n";
  out << "  wall time: " << r.wall_time_ms << " ms\n";
  return out.str();
}

inline nlohmann::ordered_json placements_json(const std::set<Placement>& ps) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const Placement& p : ps) a.push_back({{"n", p.n}, {"rows_by_column", p.rows_by_column}});
  return a;
}

}  // namespace dq
