// dq: solve n-queens with the embedded program, compute its bounded model,
// and run the bounded correctness and completeness checks.
//
// Exit codes: 0 pass, 1 fail or error in the subject, 2 incomplete search,
// 3 inconclusive (resources), 64 usage.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dq/model.hpp"
#include "dq/mutation.hpp"
#include "dq/nqueens.hpp"
#include "dq/parser.hpp"
#include "dq/printer.hpp"
#include "dq/queens_spec.hpp"
#include "dq/report.hpp"
#include "dq/run_config.hpp"
#include "dq/verifier.hpp"

namespace {

using dq::RunConfig;
using json = nlohmann::ordered_json;

constexpr int kPass = 0, kFail = 1, kIncomplete = 2, kInconclusive = 3, kUsage = 64;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const RunConfig& c, const std::string& text) {
  if (!c.report_path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*c.report_path);
  if (!out) throw UsageError("cannot write " + *c.report_path);
  out << text;
}

dq::Program load_program(const RunConfig& c) {
  if (c.program_path && c.mutation) throw UsageError("--program and --mutate cannot be combined");
  dq::Program p;
  if (c.program_path) {
    std::ifstream in(*c.program_path);
    if (!in) throw UsageError("cannot read program " + *c.program_path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      p = dq::parse_program(ss.str());
    } catch (const dq::ParseError& e) {
      throw UsageError(*c.program_path + ": " + e.what());
    }
  } else {
    p = dq::nqueens_program();
  }
  if (c.mutation) p = dq::mutate(p, dq::parse_mutation(*c.mutation));
  return p;
}

dq::SpecId spec_or(const std::optional<std::string>& s, dq::SpecId fallback) {
  if (!s) return fallback;
  try {
    return dq::parse_spec_id(*s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string atom_text(const dq::Atom& a) { return dq::to_string(a, dq::PrintOptions{true}); }

int run_solve(const RunConfig& c) {
  const dq::Program p = load_program(c);
  dq::QueensResult r;
  try {
    r = dq::solve_queens(p, c.n, c.solve_limits);
  } catch (const dq::DecodeError& e) {
    std::cerr << "dq solve: " << e.what() << "\n";
    return kFail;
  }
  const bool complete = r.complete();
  if (c.format == "json") {
    json j{{"status", dq::to_string(r.status)},
           {"complete", complete},
           {"count", r.placements.size()},
           {"placements", dq::placements_json(r.placements)},
           {"config", dq::config_json(c)}};
    emit(c, j.dump(2) + "\n");
  } else {
    std::string out;
    for (const dq::Placement& pl : r.placements) out += dq::to_string(pl) + "\n";
    if (!complete) out += "% incomplete: " + dq::to_string(r.status) + "\n";
    emit(c, out);
  }
  return complete ? kPass : kIncomplete;
}

int run_model(const RunConfig& c) {
  const dq::Program p = load_program(c);
  const dq::Interpretation m = dq::bounded_model(p, c.bounds, dq::ModelOptions{c.max_generators, 0});
  json j{{"fixpoint", m.is_fixpoint()}, {"rounds", m.rounds()}, {"generator_count", m.generator_count()}};
  std::vector<std::string> lines;
  bool truncated = false;
  if (c.symbolic) {
    for (const dq::Atom& g : m.generators()) lines.push_back(dq::to_string(g, dq::PrintOptions{true}));
  } else if (m.is_fixpoint()) {
    std::vector<dq::Atom> atoms;
    m.for_each_atom([&](const dq::Atom& a) {
      if (atoms.size() == c.max_atoms) {
        truncated = true;
        return false;
      }
      atoms.push_back(a);
      return true;
    });
    std::sort(atoms.begin(), atoms.end());
    for (const dq::Atom& a : atoms) lines.push_back(atom_text(a));
  }
  j["truncated"] = truncated;
  j[c.symbolic ? "generators" : "atoms"] = lines;
  j["count"] = lines.size();
  j["config"] = dq::config_json(c);
  if (c.format == "json") {
    emit(c, j.dump(2) + "\n");
  } else {
    std::string out;
    for (const std::string& l : lines) out += l + "\n";
    if (!m.is_fixpoint()) out += "% inconclusive: generator limit reached before the fixpoint\n";
    if (truncated) out += "% inconclusive: more than " + std::to_string(c.max_atoms) + " atoms, listing truncated\n";
    emit(c, out);
  }
  return m.is_fixpoint() && !truncated ? kPass : kInconclusive;
}

int run_check(const RunConfig& c, const std::string& kind) {
  const dq::Program p = load_program(c);
  dq::CheckOptions o;
  o.max_counterexamples = c.max_counterexamples;
  o.max_nodes = c.max_nodes;
  o.fail_fast = c.fail_fast;
  o.sort_overrides = c.sort_overrides;
  RunConfig effective = c;
  dq::CheckReport r;
  if (kind == "model") {
    const dq::SpecId s = spec_or(c.spec, dq::SpecId::S);
    effective.spec = dq::spec_name(s);
    r = dq::check_model(p, s, c.bounds, o);
  } else if (kind == "covered") {
    const dq::SpecId s = spec_or(c.spec, dq::SpecId::S0);
    effective.spec = dq::spec_name(s);
    r = dq::check_covered(s, p, c.bounds, c.effective_witness_bounds(), o);
  } else if (kind == "recurrent") {
    r = dq::check_recurrent(p, dq::queens_level_mapping(), c.bounds, o);
  } else if (kind == "full") {
    const dq::SpecId compl_spec = spec_or(c.compl_spec, dq::SpecId::S0);
    const dq::SpecId corr_spec = spec_or(c.corr_spec ? c.corr_spec : c.spec, dq::SpecId::S);
    effective.compl_spec = dq::spec_name(compl_spec);
    effective.corr_spec = dq::spec_name(corr_spec);
    r = dq::check_full_correctness(p, dq::make_spec(compl_spec), dq::make_spec(corr_spec), c.bounds, o,
                                   dq::ModelOptions{c.max_generators, 0});
  } else if (kind == "shift") {
    r = dq::check_context_shift(c.bounds, o);
  } else {
    throw UsageError("unknown check kind " + kind);
  }
  if (c.format == "json") {
    emit(c, dq::report_json(r, dq::config_json(effective)).dump(2) + "\n");
  } else {
    emit(c, dq::report_text(r));
  }
  switch (r.verdict) {
    case dq::CheckVerdict::Pass: return kPass;
    case dq::CheckVerdict::Fail: return kFail;
    case dq::CheckVerdict::Inconclusive: return kInconclusive;
  }
  return kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"n-queens program: solver, bounded model and bounded verification"};
  app.require_subcommand(1);

  std::string config_path, format, out_path, spec, compl_spec, corr_spec, mutation, program_path, kind;
  std::size_t n = 0, big_n = 0, big_l = 0, witness_n = 0, witness_l = 0, max_depth = 0, max_answers = 0,
              max_counterexamples = 0, max_atoms = 0, max_generators = 0;
  std::uint64_t max_nodes = 0;
  bool fail_fast = false, symbolic = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file; flags override it");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", out_path, "Write the output to PATH instead of stdout");
    sub->add_option("--program", program_path, "Use the program in PATH instead of the embedded one");
  };
  auto bounds = [&](CLI::App* sub) {
    sub->add_option("--N", big_n, "Largest numeral in the bounded universe (default 4)");
    sub->add_option("--L", big_l, "Longest list spine in the bounded universe (default 4)");
  };

  CLI::App* solve = app.add_subcommand("solve", "Print all n-queens placements found by SLD resolution");
  common(solve);
  solve->add_option("--n", n, "Board size (default 8)");
  solve->add_option("--max-depth", max_depth, "Resolution steps allowed along one branch (default 10000)");
  solve->add_option("--max-answers", max_answers, "Stop after this many answers");

  CLI::App* model = app.add_subcommand("model", "List the bounded least Herbrand model");
  common(model);
  bounds(model);
  model->add_option("--mutate", mutation, "Program mutation, e.g. drop-clause:3");
  model->add_flag("--symbolic", symbolic, "Print the non-ground generators instead of ground atoms");
  model->add_option("--max-atoms", max_atoms, "Largest listing before giving up with exit 3 (default 100000)");
  model->add_option("--max-generators", max_generators, "Generator limit of the fixpoint (default 500000)");

  CLI::App* check = app.add_subcommand("check", "Run a bounded verification check");
  common(check);
  bounds(check);
  check->add_option("kind", kind, "model, covered, recurrent, full or shift")
      ->required()
      ->check(CLI::IsMember({"model", "covered", "recurrent", "full", "shift"}));
  check->add_option("--spec", spec, "Specification: S_pq, S_pqs, S, S_pqs0 or S0");
  check->add_option("--compl", compl_spec, "Completeness specification for 'full' (default S0)");
  check->add_option("--corr", corr_spec, "Correctness specification for 'full' (default S)");
  check->add_option("--mutate", mutation,
                    "Program mutation: drop-clause:C, swap-args:C:A,B, unshift-head:C:A, shift-body:C:B[:A], "
                    "self-loop:p/n");
  check->add_option("--witness-N", witness_n, "Witness bound N for 'covered' (default N)");
  check->add_option("--witness-L", witness_l, "Witness bound L for 'covered' (default L+1)");
  check->add_option("--max-nodes", max_nodes, "Search node budget per search (0 = unlimited)");
  check->add_option("--max-counterexamples", max_counterexamples, "Counterexamples kept in the report (default 100)");
  check->add_option("--max-generators", max_generators, "Generator limit of the fixpoint for 'full'");
  check->add_flag("--fail-fast", fail_fast, "Stop at the first counterexample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  CLI::App* used = app.get_subcommands().front();
  auto given = [&](const std::string& flag) {
    try {
      return used->get_option(flag)->count() > 0;
    } catch (const CLI::OptionNotFound&) {
      return false;
    }
  };

  try {
    RunConfig c;
    if (given("--config")) dq::load_config_file(config_path, c);
    c.command = used->get_name();
    if (used == check) c.command += " " + kind;
    if (given("--format")) c.format = format;
    if (given("--out")) c.report_path = out_path;
    if (given("--program")) c.program_path = program_path;
    if (given("--n")) c.n = n;
    if (given("--max-depth")) c.solve_limits.max_depth = max_depth;
    if (given("--max-answers")) c.solve_limits.max_answers = max_answers;
    if (given("--N")) c.bounds.max_numeral = big_n;
    if (given("--L")) c.bounds.max_list_len = big_l;
    if (given("--witness-N") || given("--witness-L")) {
      dq::UniverseBounds w = c.effective_witness_bounds();
      if (given("--witness-N")) w.max_numeral = witness_n;
      if (given("--witness-L")) w.max_list_len = witness_l;
      c.witness_bounds = w;
    }
    if (given("--spec")) c.spec = spec;
    if (given("--compl")) c.compl_spec = compl_spec;
    if (given("--corr")) c.corr_spec = corr_spec;
    if (given("--mutate")) c.mutation = mutation;
    if (given("--max-nodes")) c.max_nodes = max_nodes;
    if (given("--max-counterexamples")) c.max_counterexamples = max_counterexamples;
    if (given("--fail-fast")) c.fail_fast = fail_fast;
    if (given("--max-atoms")) c.max_atoms = max_atoms;
    if (given("--max-generators")) c.max_generators = max_generators;
    if (given("--symbolic")) c.symbolic = symbolic;

    if (used == solve) return run_solve(c);
    if (used == model) return run_model(c);
    return run_check(c, kind);
  } catch (const UsageError& e) {
    std::cerr << "dq: " << e.what() << "\n";
    return kUsage;
  } catch (const dq::ConfigError& e) {
    std::cerr << "dq: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "dq: " << e.what() << "\n";
    return kUsage;
  }
}
