// Effective configuration of a command-line run. Read from an optional JSON
// file, overridden by flags, and echoed into every report.

#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dq/instances.hpp"
#include "dq/parser.hpp"
#include "dq/printer.hpp"
#include "dq/sld.hpp"
#include "dq/universe.hpp"

namespace dq {

struct RunConfig {
  std::string command;  // "solve", "model", "check model", ...
  std::size_t n = 8;
  UniverseBounds bounds = UniverseBounds::of(4, 4);
  std::optional<UniverseBounds> witness_bounds;  // unset: N as bounds, L one more
  std::optional<std::string> spec;               // unset: per-check default
  std::optional<std::string> compl_spec;
  std::optional<std::string> corr_spec;
  SolveLimits solve_limits;
  std::optional<std::string> mutation;
  std::optional<std::string> program_path;
  std::string format = "text";
  std::optional<std::string> report_path;
  std::uint64_t max_nodes = 0;
  std::size_t max_counterexamples = 100;
  bool fail_fast = false;
  std::size_t max_atoms = 100000;
  std::size_t max_generators = 500000;
  bool symbolic = false;
  std::map<std::size_t, std::map<std::string, Sort>> sort_overrides;

  UniverseBounds effective_witness_bounds() const {
    return witness_bounds ? *witness_bounds : bounds.with_list_len(bounds.max_list_len + 1);
  }
};

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson bounds_to_json(const UniverseBounds& b) {
  ojson pool = ojson::array(), tails = ojson::array();
  for (const Term& t : b.element_pool_extra) pool.push_back(to_string(t));
  for (const Term& t : b.tail_pool) tails.push_back(to_string(t));
  return {{"N", b.max_numeral}, {"L", b.max_list_len}, {"element_pool_extra", pool}, {"tail_pool", tails}};
}

template <class T>
T get_field(const ojson& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("config: bad value for " + where);
  }
}

inline void require_object(const ojson& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError("config: " + where + " must be an object");
}

inline void bounds_from_json(const ojson& j, UniverseBounds& b, const std::string& where) {
  require_object(j, where);
  for (const auto& [key, v] : j.items()) {
    if (key == "N") {
      b.max_numeral = get_field<std::size_t>(v, where + ".N");
    } else if (key == "L") {
      b.max_list_len = get_field<std::size_t>(v, where + ".L");
    } else if (key == "element_pool_extra" || key == "tail_pool") {
      std::vector<Term> terms;
      for (const std::string& s : get_field<std::vector<std::string>>(v, where + "." + key)) {
        Term t;
        try {
          t = parse_term(s);
        } catch (const ParseError& e) {
          throw ConfigError("config: " + where + "." + key + ": " + e.what());
        }
        if (!t.is_ground() || t.arity() != 0) throw ConfigError("config: " + where + "." + key + " takes constants");
        terms.push_back(t);
      }
      (key == "tail_pool" ? b.tail_pool : b.element_pool_extra) = std::move(terms);
    } else {
      throw ConfigError("config: unknown field " + where + "." + key);
    }
  }
}

template <class T>
ojson optional_json(const std::optional<T>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

}  // namespace detail

inline nlohmann::ordered_json config_json(const RunConfig& c) {
  using detail::ojson;
  ojson sorts = ojson::object();
  for (const auto& [clause, by_name] : c.sort_overrides) {
    ojson m = ojson::object();
    for (const auto& [name, sort] : by_name) m[name] = to_string(sort);
    sorts[std::to_string(clause)] = m;
  }
  return {{"command", c.command},
          {"n", c.n},
          {"bounds", detail::bounds_to_json(c.bounds)},
          {"witness_bounds", detail::bounds_to_json(c.effective_witness_bounds())},
          {"spec", detail::optional_json(c.spec)},
          {"compl_spec", detail::optional_json(c.compl_spec)},
          {"corr_spec", detail::optional_json(c.corr_spec)},
          {"solve_limits",
           {{"max_depth", c.solve_limits.max_depth}, {"max_answers", detail::optional_json(c.solve_limits.max_answers)}}},
          {"mutation", detail::optional_json(c.mutation)},
          {"program_path", detail::optional_json(c.program_path)},
          {"format", c.format},
          {"report_path", detail::optional_json(c.report_path)},
          {"max_nodes", c.max_nodes},
          {"max_counterexamples", c.max_counterexamples},
          {"fail_fast", c.fail_fast},
          {"max_atoms", c.max_atoms},
          {"max_generators", c.max_generators},
          {"symbolic", c.symbolic},
          {"sort_overrides", sorts}};
}

// Applies the fields present in j to c. Unknown fields are errors.
inline void apply_config_json(const nlohmann::ordered_json& j, RunConfig& c) {
  using detail::get_field;
  using detail::ojson;
  detail::require_object(j, "top level");
  auto opt_string = [&](const ojson& v, const std::string& where) -> std::optional<std::string> {
    if (v.is_null()) return std::nullopt;
    return get_field<std::string>(v, where);
  };
  for (const auto& [key, v] : j.items()) {
    if (key == "command") {
      c.command = get_field<std::string>(v, key);
    } else if (key == "n") {
      c.n = get_field<std::size_t>(v, key);
    } else if (key == "bounds") {
      detail::bounds_from_json(v, c.bounds, key);
    } else if (key == "witness_bounds") {
      if (v.is_null()) {
        c.witness_bounds.reset();
      } else {
        UniverseBounds w = c.witness_bounds.value_or(c.effective_witness_bounds());
        detail::bounds_from_json(v, w, key);
        c.witness_bounds = w;
      }
    } else if (key == "spec") {
      c.spec = opt_string(v, key);
    } else if (key == "compl_spec") {
      c.compl_spec = opt_string(v, key);
    } else if (key == "corr_spec") {
      c.corr_spec = opt_string(v, key);
    } else if (key == "solve_limits") {
      detail::require_object(v, key);
      for (const auto& [k2, v2] : v.items()) {
        if (k2 == "max_depth") {
          c.solve_limits.max_depth = get_field<std::size_t>(v2, key + "." + k2);
        } else if (k2 == "max_answers") {
          if (v2.is_null()) {
            c.solve_limits.max_answers.reset();
          } else {
            c.solve_limits.max_answers = get_field<std::size_t>(v2, key + "." + k2);
          }
        } else {
          throw ConfigError("config: unknown field " + key + "." + k2);
        }
      }
    } else if (key == "mutation") {
      c.mutation = opt_string(v, key);
    } else if (key == "program_path") {
      c.program_path = opt_string(v, key);
    } else if (key == "format") {
      c.format = get_field<std::string>(v, key);
    } else if (key == "report_path") {
      c.report_path = opt_string(v, key);
    } else if (key == "max_nodes") {
      c.max_nodes = get_field<std::uint64_t>(v, key);
    } else if (key == "max_counterexamples") {
      c.max_counterexamples = get_field<std::size_t>(v, key);
    } else if (key == "fail_fast") {
      c.fail_fast = get_field<bool>(v, key);
    } else if (key == "max_atoms") {
      c.max_atoms = get_field<std::size_t>(v, key);
    } else if (key == "max_generators") {
      c.max_generators = get_field<std::size_t>(v, key);
    } else if (key == "symbolic") {
      c.symbolic = get_field<bool>(v, key);
    } else if (key == "sort_overrides") {
      detail::require_object(v, key);
      c.sort_overrides.clear();
      for (const auto& [clause, by_name] : v.items()) {
        std::size_t idx = 0;
        try {
          idx = std::stoul(clause);
        } catch (const std::exception&) {
          throw ConfigError("config: sort_overrides keys are clause numbers");
        }
        detail::require_object(by_name, key + "." + clause);
        for (const auto& [name, sort] : by_name.items()) {
          try {
            c.sort_overrides[idx][name] = parse_sort(get_field<std::string>(sort, key));
          } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("config: ") + e.what());
          }
        }
      }
    } else {
      throw ConfigError("config: unknown field " + key);
    }
  }
  if (c.format != "text" && c.format != "json") throw ConfigError("config: format must be text or json");
}

inline void load_config_file(const std::string& path, RunConfig& c) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file " + path + ": " + e.what());
  }
  apply_config_json(j, c);
}

}  // namespace dq
