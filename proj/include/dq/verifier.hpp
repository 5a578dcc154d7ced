// Bounded checks of the sufficient conditions for correctness (the
// specification is a model of every clause) and completeness (every specified
// atom is covered, and the program is recurrent), plus the full sandwich
// S_compl within M_P within S_corr and the context-shift sweep.
//
// Every check walks a finite instance space with the refinement search of
// search.hpp. Inner nodes are judged with the three-valued predicates; leaves
// are judged with the ground predicates. Verdicts are relative to the bounds.

#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dq/instances.hpp"
#include "dq/model.hpp"
#include "dq/printer.hpp"
#include "dq/queens_spec.hpp"
#include "dq/search.hpp"
#include "dq/term.hpp"
#include "dq/tri.hpp"
#include "dq/universe.hpp"

namespace dq {

enum class CheckVerdict { Pass, Fail, Inconclusive };

inline std::string to_string(CheckVerdict v) {
  switch (v) {
    case CheckVerdict::Pass: return "pass";
    case CheckVerdict::Fail: return "fail";
    case CheckVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct Counterexample {
  std::string text;    // ground clause instance or atom
  std::string reason;
  std::string component;
};

struct CheckComponent {
  std::string name;
  CheckVerdict verdict = CheckVerdict::Pass;
  Count instances_checked = 0;
  Count counterexample_total = 0;
};

struct CheckReport {
  std::string check;
  std::string subject;  // specification or mapping name
  CheckVerdict verdict = CheckVerdict::Pass;
  std::vector<Counterexample> counterexamples;  // at most the configured cap
  Count counterexample_total = 0;
  Count instances_checked = 0;
  UniverseBounds bounds_used;
  std::optional<UniverseBounds> witness_bounds;
  double wall_time_ms = 0;
  std::vector<CheckComponent> components;
  std::vector<std::string> notes;
};

struct CheckOptions {
  std::size_t max_counterexamples = 100;
  std::uint64_t max_nodes = 0;  // per search; 0 = unlimited
  bool fail_fast = false;       // stop at the first counterexample; totals become lower bounds
  // Per clause (1-based), sorts of named variables replacing the default schema.
  std::map<std::size_t, std::map<std::string, Sort>> sort_overrides;
};

namespace detail {

class ReportBuilder {
 public:
  ReportBuilder(std::string check, std::string subject, const UniverseBounds& b, const CheckOptions& o)
      : options_(o), start_(std::chrono::steady_clock::now()) {
    report_.check = std::move(check);
    report_.subject = std::move(subject);
    report_.bounds_used = b;
  }

  CheckReport& report() { return report_; }

  CheckComponent& component(const std::string& name) {
    for (CheckComponent& c : report_.components) {
      if (c.name == name) return c;
    }
    report_.components.push_back({name});
    return report_.components.back();
  }

  bool wants_more() const { return report_.counterexamples.size() < options_.max_counterexamples; }

  void add_counterexamples(CheckComponent& comp, Count total) {
    comp.counterexample_total = sat_add(comp.counterexample_total, total);
    report_.counterexample_total = sat_add(report_.counterexample_total, total);
  }

  void add_example(std::string text, std::string reason, const std::string& component) {
    if (wants_more()) report_.counterexamples.push_back({std::move(text), std::move(reason), component});
  }

  // Called on each violated region; false asks the search to stop.
  bool keep_going() {
    if (!options_.fail_fast) return true;
    stopped_ = true;
    return false;
  }
  bool stopped() const { return stopped_; }

  void absorb(CheckComponent& comp, const SearchStats& s) {
    comp.instances_checked = sat_add(comp.instances_checked, sat_add(s.holds, s.violated));
    report_.instances_checked = sat_add(report_.instances_checked, sat_add(s.holds, s.violated));
    if (s.budget_exhausted) comp.verdict = CheckVerdict::Inconclusive;
  }

  CheckReport finish() {
    if (stopped_) report_.notes.push_back("stopped at the first counterexample; totals are lower bounds");
    bool inconclusive = false;
    for (CheckComponent& c : report_.components) {
      if (stopped_ && c.counterexample_total == 0) c.verdict = CheckVerdict::Inconclusive;
      if (c.counterexample_total > 0) c.verdict = CheckVerdict::Fail;
      if (c.verdict == CheckVerdict::Inconclusive) inconclusive = true;
    }
    if (report_.counterexample_total > 0) {
      report_.verdict = CheckVerdict::Fail;
    } else {
      report_.verdict = inconclusive ? CheckVerdict::Inconclusive : CheckVerdict::Pass;
    }
    report_.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

  const CheckOptions& options() const { return options_; }

 private:
  CheckReport report_;
  CheckOptions options_;
  std::chrono::steady_clock::time_point start_;
  bool stopped_ = false;
};

inline InstantiationSchema schema_for(const Clause& c, std::size_t index, const CheckOptions& o) {
  InstantiationSchema s = default_schema(c);
  auto it = o.sort_overrides.find(index + 1);
  if (it != o.sort_overrides.end()) s = override_sorts(c, s, it->second);
  return s;
}

inline std::string clause_text(const std::vector<Term>& terms) {
  return to_string(clause_from_terms(terms), PrintOptions{true});
}

inline std::string term_text(const Term& t) { return to_string(t, PrintOptions{true}); }

// Reports up to the remaining cap of ground completions of a decided region.
template <class Describe>
void report_region(ReportBuilder& rb, const SearchNode& n, const UniverseBounds& b, const std::string& component,
                   Describe describe) {
  if (!rb.wants_more()) return;
  for_each_completion(n, b, kCountMax, [&](const std::vector<Term>& ts) {
    auto [text, reason] = describe(ts);
    rb.add_example(std::move(text), std::move(reason), component);
    return rb.wants_more();
  });
}

// Index of the pending variable v, or 0 when v is absent or not pending.
inline std::size_t pending_index(const SearchNode& n, const Term* v) {
  for (std::size_t i = 0; v && i < n.pending.size(); ++i) {
    if (n.pending[i].var.var_id() == v->var_id()) return i;
  }
  return 0;
}

// Among the blockers of the undecided atoms, the one occurring in most of
// them; ties go to the earlier atom.
inline const Term* shared_blocker(const Specification& spec, const std::vector<const Term*>& undecided) {
  const Term* best = nullptr;
  std::size_t best_count = 0;
  for (const Term* a : undecided) {
    const Term* v = spec.blocker(*a);
    if (!v) continue;
    std::size_t count = 0;
    for (const Term* other : undecided) count += occurs(v->var_id(), *other) ? 1 : 0;
    if (count > best_count) {
      best = v;
      best_count = count;
    }
  }
  return best;
}

inline std::vector<PredicateKey> queens_predicates(const Program& p) {
  std::vector<PredicateKey> out = head_predicates(p);
  for (PredicateKey k : {PredicateKey{"pq", 4}, PredicateKey{"pqs", 4}}) {
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline SearchNode atom_space(const PredicateKey& k, const UniverseBounds& b) {
  SearchNode root;
  std::vector<Term> args;
  const std::vector<Sort> sorts = argument_sorts(k.first, k.second);
  for (std::size_t i = 0; i < k.second; ++i) {
    Term v = Term::fresh_var();
    args.push_back(v);
    root.pending.push_back({v, Domain::of(sorts[i], b)});
  }
  root.terms.push_back(Term::compound(k.first, std::move(args)));
  return root;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Model condition: for each bounded ground instance H :- B1..Bn, if every Bi
// is in the specification then so is H.

inline CheckReport check_model(const Program& program, const Specification& spec, const UniverseBounds& b,
                               const CheckOptions& options = {}) {
  detail::ReportBuilder rb("model", spec.name, b, options);
  for (std::size_t ci = 0; ci < program.clauses.size() && !rb.stopped(); ++ci) {
    const Clause& c = program.clauses[ci];
    const std::string comp = "clause " + std::to_string(ci + 1);
    CheckComponent& component = rb.component(comp);
    const SearchNode root = clause_search_root(c, detail::schema_for(c, ci, options), b);
    std::vector<const Term*> undecided;  // atoms of the last Open node without a verdict, head first
    auto eval = [&](const SearchNode& n) {
      if (n.is_leaf()) {
        for (std::size_t k = 1; k < n.terms.size(); ++k) {
          if (!spec.member(Atom(n.terms[k]))) return Verdict::Holds;
        }
        return spec.member(Atom(n.terms[0])) ? Verdict::Holds : Verdict::Violated;
      }
      undecided.clear();
      Tri body = Tri::True;
      for (std::size_t k = 1; k < n.terms.size(); ++k) {
        const Tri t = spec.member3(n.terms[k]);
        if (t == Tri::False) return Verdict::Holds;
        if (t == Tri::Unknown) undecided.push_back(&n.terms[k]);
        body = body && t;
      }
      const Tri head = spec.member3(n.terms[0]);
      if (head == Tri::True) return Verdict::Holds;
      if (head == Tri::False && body == Tri::True) return Verdict::Violated;
      if (head == Tri::Unknown) undecided.insert(undecided.begin(), &n.terms[0]);
      return Verdict::Open;
    };
    auto choose = [&](const SearchNode& n) { return detail::pending_index(n, detail::shared_blocker(spec, undecided)); };
    auto on_decided = [&](const SearchNode& n, Verdict v, Count count) {
      if (v != Verdict::Violated) return true;
      rb.add_counterexamples(rb.component(comp), count);
      detail::report_region(rb, n, b, comp, [&](const std::vector<Term>& ts) {
        return std::pair{detail::clause_text(ts), "body atoms in " + spec.name + ", head not in " + spec.name};
      });
      return rb.keep_going();
    };
    rb.absorb(component, refine_search(root, b, eval, on_decided, choose, SearchLimits{options.max_nodes}));
  }
  return rb.finish();
}

inline CheckReport check_model(const Program& program, SpecId spec, const UniverseBounds& b,
                               const CheckOptions& options = {}) {
  return check_model(program, make_spec(spec), b, options);
}

// ---------------------------------------------------------------------------
// Covered atoms: A is covered if it is the head of a ground clause instance
// whose body atoms are all in the specification. Body variables that do not
// occur in the head are searched over the witness bounds.

namespace detail {

inline Tri body_in_spec3(const Specification& spec, const std::vector<Atom>& body) {
  Tri r = Tri::True;
  for (const Atom& a : body) {
    r = r && spec.member3(a.as_term());
    if (r == Tri::False) break;
  }
  return r;
}

// Searches ground values of `free` (sorted by the clause's default schema at
// the witness bounds) making every body atom a member.
inline bool find_witness(const Specification& spec, const Clause& clause, const std::vector<Atom>& body,
                         const std::vector<Term>& free, const UniverseBounds& wb) {
  const InstantiationSchema schema = default_schema(clause);
  SearchNode root;
  for (const Atom& a : body) root.terms.push_back(a.as_term());
  for (const Term& v : free) {
    auto it = schema.find(v.var_id());
    root.pending.push_back({v, Domain::of(it == schema.end() ? Sort::AnyPoolTerm : it->second, wb)});
  }
  bool found = false;
  refine_search(
      root, wb,
      [&](const SearchNode& n) {
        Tri r = Tri::True;
        for (const Term& t : n.terms) {
          r = r && (n.is_leaf() ? tri(spec.member(Atom(t))) : spec.member3(t));
          if (r == Tri::False) break;
        }
        return r == Tri::True ? Verdict::Holds : r == Tri::False ? Verdict::Violated : Verdict::Open;
      },
      [&](const SearchNode&, Verdict v, Count) {
        found = v == Verdict::Holds;
        return !found;
      });
  return found;
}

}  // namespace detail

// Is a (possibly partial) atom covered? For partial atoms, True means every
// completion is covered and False that none is. Clauses with body variables
// outside the head are only judged on ground atoms.
inline Tri covered3(const Specification& spec, const Program& program, const Term& atom,
                    const UniverseBounds& witness_bounds) {
  Tri r = Tri::False;
  for (const Clause& original : program.clauses) {
    const Clause c = rename_apart(original);
    const std::optional<Substitution> m = match(c.head.as_term(), atom);
    if (!m) {
      if (!atom.is_ground() && unify(c.head.as_term(), atom)) r = r || Tri::Unknown;
      continue;
    }
    std::vector<Atom> body;
    for (const Atom& b : c.body) body.push_back(apply(*m, b));
    std::vector<Term> head_vars, free;
    collect_vars(c.head.as_term(), head_vars);
    for (const Atom& b : c.body) collect_vars(b.as_term(), free);
    std::erase_if(free, [&](const Term& v) {
      return std::any_of(head_vars.begin(), head_vars.end(), [&](const Term& h) { return h == v; });
    });
    std::sort(free.begin(), free.end());
    free.erase(std::unique(free.begin(), free.end()), free.end());
    const Tri body3 = detail::body_in_spec3(spec, body);
    if (body3 == Tri::True) return Tri::True;
    if (body3 == Tri::False) continue;
    if (!atom.is_ground()) {
      r = r || Tri::Unknown;
      continue;
    }
    // Witness search keeps the clause's variable order for determinism.
    std::vector<Term> ordered;
    for (const Term& v : clause_vars(c)) {
      if (std::find(free.begin(), free.end(), v) != free.end()) ordered.push_back(v);
    }
    if (detail::find_witness(spec, c, body, ordered, witness_bounds)) return Tri::True;
  }
  return r;
}

inline bool covered(const Specification& spec, const Program& program, const Atom& atom,
                    const UniverseBounds& witness_bounds) {
  if (!atom.is_ground()) throw std::invalid_argument("covered needs a ground atom");
  return covered3(spec, program, atom.as_term(), witness_bounds) == Tri::True;
}

inline CheckReport check_covered(const Specification& spec, const Program& program, const UniverseBounds& b,
                                 const UniverseBounds& witness_bounds, const CheckOptions& options = {}) {
  detail::ReportBuilder rb("covered", spec.name, b, options);
  rb.report().witness_bounds = witness_bounds;
  for (const PredicateKey& k : detail::queens_predicates(program)) {
    if (rb.stopped()) break;
    const std::string comp = k.first + "/" + std::to_string(k.second);
    CheckComponent& component = rb.component(comp);
    bool spec_open = false;
    auto eval = [&](const SearchNode& n) {
      const Term& a = n.terms[0];
      const Tri in_spec = n.is_leaf() ? tri(spec.member(Atom(a))) : spec.member3(a);
      if (in_spec == Tri::False) return Verdict::Holds;
      spec_open = in_spec == Tri::Unknown;
      const Tri cov = covered3(spec, program, a, witness_bounds);
      if (cov == Tri::True) return Verdict::Holds;
      if (cov == Tri::False && in_spec == Tri::True) return Verdict::Violated;
      return Verdict::Open;
    };
    auto on_decided = [&](const SearchNode& n, Verdict v, Count count) {
      if (v != Verdict::Violated) return true;
      rb.add_counterexamples(rb.component(comp), count);
      detail::report_region(rb, n, b, comp, [&](const std::vector<Term>& ts) {
        return std::pair{detail::term_text(ts[0]), "in " + spec.name + " but not covered"};
      });
      return rb.keep_going();
    };
    auto choose = [&](const SearchNode& n) { return spec_open ? detail::pending_index(n, spec.blocker(n.terms[0])) : 0; };
    rb.absorb(component,
              refine_search(detail::atom_space(k, b), b, eval, on_decided, choose, SearchLimits{options.max_nodes}));
  }
  return rb.finish();
}

inline CheckReport check_covered(SpecId spec, const Program& program, const UniverseBounds& b,
                                 const UniverseBounds& witness_bounds, const CheckOptions& options = {}) {
  return check_covered(make_spec(spec), program, b, witness_bounds, options);
}

// ---------------------------------------------------------------------------
// Level mappings and recurrence.

// |[h|t]| = 1 + |t|, |s(t)| = 1 + |t|, 0 for every other term.
inline std::size_t term_size(const Term& t) {
  std::size_t n = 0;
  for (const Term* cur = &t; is_cons(*cur) || is_succ(*cur); cur = &cur->arg(is_cons(*cur) ? 1 : 0)) ++n;
  return n;
}

// c + sum of coeff(v) * |v| over variables v.
struct LinearForm {
  long long constant = 0;
  std::map<VarId, long long> coeff;

  LinearForm& operator+=(const LinearForm& o) {
    constant += o.constant;
    for (const auto& [v, k] : o.coeff) coeff[v] += k;
    return *this;
  }
  LinearForm operator-(const LinearForm& o) const {
    LinearForm r = *this;
    r.constant -= o.constant;
    for (const auto& [v, k] : o.coeff) r.coeff[v] -= k;
    return r;
  }
};

// Size of a partial term as a linear form in the sizes of its variables.
inline LinearForm size_form(const Term& t) {
  LinearForm f;
  const Term* cur = &t;
  while (is_cons(*cur) || is_succ(*cur)) {
    ++f.constant;
    cur = &cur->arg(is_cons(*cur) ? 1 : 0);
  }
  if (cur->is_var()) f.coeff[cur->var_id()] += 1;
  return f;
}

struct LevelMapping {
  std::string name;
  std::function<std::size_t(const Atom&)> level;         // ground atoms
  std::function<LinearForm(const Term&)> level_form;     // partial atoms
};

// |pqs(i,cs,us,ds)| = |i| + |cs|, |pq(i,cs,us,ds)| = |cs|; any other atom
// gets the sum of its argument sizes.
inline LevelMapping queens_level_mapping() {
  auto args_of = [](const std::string& pred, std::size_t arity) -> std::vector<std::size_t> {
    if (pred == "pqs" && arity == 4) return {0, 1};
    if (pred == "pq" && arity == 4) return {1};
    std::vector<std::size_t> all(arity);
    for (std::size_t i = 0; i < arity; ++i) all[i] = i;
    return all;
  };
  return {"queens",
          [args_of](const Atom& a) {
            std::size_t n = 0;
            for (std::size_t i : args_of(a.predicate(), a.arity())) n += term_size(a.arg(i));
            return n;
          },
          [args_of](const Term& a) {
            LinearForm f;
            for (std::size_t i : args_of(a.functor(), a.arity())) f += size_form(a.arg(i));
            return f;
          }};
}

inline std::size_t level(const LevelMapping& mapping, const Atom& atom) {
  if (!atom.is_ground()) throw std::invalid_argument("level needs a ground atom");
  return mapping.level(atom);
}

namespace detail {

// Range of a linear form over the pending domains of a node.
inline std::pair<long long, long long> form_range(const LinearForm& f, const SearchNode& n, const UniverseBounds& b) {
  long long lo = f.constant, hi = f.constant;
  for (const auto& [v, k] : f.coeff) {
    if (k == 0) continue;
    const Domain* d = n.domain_of(v);
    const auto [dlo, dhi] = d ? domain_size_range(*d, b) : std::pair<std::size_t, std::size_t>{0, 0};
    if (k > 0) {
      lo += k * static_cast<long long>(dlo);
      hi += k * static_cast<long long>(dhi);
    } else {
      lo += k * static_cast<long long>(dhi);
      hi += k * static_cast<long long>(dlo);
    }
  }
  return {lo, hi};
}

}  // namespace detail

inline CheckReport check_recurrent(const Program& program, const LevelMapping& mapping, const UniverseBounds& b,
                                   const CheckOptions& options = {}) {
  detail::ReportBuilder rb("recurrent", mapping.name, b, options);
  for (std::size_t ci = 0; ci < program.clauses.size() && !rb.stopped(); ++ci) {
    const Clause& c = program.clauses[ci];
    const std::string comp = "clause " + std::to_string(ci + 1);
    CheckComponent& component = rb.component(comp);
    const SearchNode root = clause_search_root(c, detail::schema_for(c, ci, options), b);
    auto eval = [&](const SearchNode& n) {
      if (n.is_leaf()) {
        const std::size_t h = mapping.level(Atom(n.terms[0]));
        for (std::size_t k = 1; k < n.terms.size(); ++k) {
          if (h <= mapping.level(Atom(n.terms[k]))) return Verdict::Violated;
        }
        return Verdict::Holds;
      }
      const LinearForm h = mapping.level_form(n.terms[0]);
      bool all_decrease = true;
      for (std::size_t k = 1; k < n.terms.size(); ++k) {
        const auto [lo, hi] = detail::form_range(h - mapping.level_form(n.terms[k]), n, b);
        if (hi <= 0) return Verdict::Violated;
        if (lo <= 0) all_decrease = false;
      }
      return all_decrease ? Verdict::Holds : Verdict::Open;
    };
    auto on_decided = [&](const SearchNode& n, Verdict v, Count count) {
      if (v != Verdict::Violated) return true;
      rb.add_counterexamples(rb.component(comp), count);
      detail::report_region(rb, n, b, comp, [&](const std::vector<Term>& ts) {
        const std::size_t h = mapping.level(Atom(ts[0]));
        std::string reason = "level(head) = " + std::to_string(h);
        for (std::size_t k = 1; k < ts.size(); ++k) {
          const std::size_t l = mapping.level(Atom(ts[k]));
          if (h <= l) reason += ", level(body " + std::to_string(k) + ") = " + std::to_string(l);
        }
        return std::pair{detail::clause_text(ts), reason};
      });
      return rb.keep_going();
    };
    rb.absorb(component, refine_search(root, b, eval, on_decided, SearchLimits{options.max_nodes}));
  }
  return rb.finish();
}

// ---------------------------------------------------------------------------
// Full correctness: S_compl within M_P within S_corr on the bounded base.

inline CheckReport check_full_correctness(const Program& program, const Specification& compl_spec,
                                          const Specification& corr_spec, const UniverseBounds& b,
                                          const CheckOptions& options = {}, const ModelOptions& model_options = {}) {
  detail::ReportBuilder rb("full", compl_spec.name + " / " + corr_spec.name, b, options);
  const Interpretation model = bounded_model(program, b, model_options);
  rb.report().notes.push_back("model derived at list bound " + std::to_string(model.derivation_bounds().max_list_len) +
                              " with " + std::to_string(model.generator_count()) + " generators");
  const std::string corr_name = "correctness: M_P within " + corr_spec.name;
  const std::string compl_name = "completeness: " + compl_spec.name + " within M_P";
  if (!model.is_fixpoint()) {
    rb.component(corr_name).verdict = CheckVerdict::Inconclusive;
    rb.component(compl_name).verdict = CheckVerdict::Inconclusive;
    rb.report().notes.push_back("model computation stopped before the fixpoint");
    return rb.finish();
  }
  struct Direction {
    const std::string& name;
    bool correctness;
  };
  for (const Direction dir : {Direction{corr_name, true}, Direction{compl_name, false}}) {
    CheckComponent& component = rb.component(dir.name);
    const Specification& spec = dir.correctness ? corr_spec : compl_spec;
    for (const PredicateKey& k : detail::queens_predicates(program)) {
      if (rb.stopped()) break;
      const Atom* open = nullptr;
      auto eval = [&](const SearchNode& n) {
        const Term& a = n.terms[0];
        open = nullptr;
        const Tri in_model = n.is_leaf() ? tri(model.derives(Atom(a))) : model.contains3(a, &open);
        const Tri in_spec = n.is_leaf() ? tri(spec.member(Atom(a))) : spec.member3(a);
        if (dir.correctness) {
          if (in_model == Tri::False || in_spec == Tri::True) return Verdict::Holds;
          if (in_model == Tri::True && in_spec == Tri::False) return Verdict::Violated;
        } else {
          if (in_spec == Tri::False || in_model == Tri::True) return Verdict::Holds;
          if (in_spec == Tri::True && in_model == Tri::False) return Verdict::Violated;
        }
        return Verdict::Open;
      };
      auto on_decided = [&](const SearchNode& n, Verdict v, Count count) {
        if (v != Verdict::Violated) return true;
        rb.add_counterexamples(rb.component(dir.name), count);
        detail::report_region(rb, n, b, dir.name, [&](const std::vector<Term>& ts) {
          return std::pair{detail::term_text(ts[0]), dir.correctness ? "in M_P but not in " + spec.name
                                                                      : "in " + spec.name + " but not in M_P"};
        });
        return rb.keep_going();
      };
      auto choose = [&](const SearchNode& n) { return model.choose(n, open); };
      rb.absorb(component, refine_search(detail::atom_space(k, b), b, eval, on_decided, choose,
                                         SearchLimits{options.max_nodes}));
    }
  }
  return rb.finish();
}

inline CheckReport check_full_correctness(const Program& program, SpecId compl_spec, SpecId corr_spec,
                                          const UniverseBounds& b, const CheckOptions& options = {}) {
  return check_full_correctness(program, make_spec(compl_spec), make_spec(corr_spec), b, options);
}

// ---------------------------------------------------------------------------
// Context shift: both directions over every triple of boards at the bounds,
// every 0 < m <= i <= N and every t, t' in the element pool.

inline CheckReport check_context_shift(const UniverseBounds& b, const CheckOptions& options = {}) {
  detail::ReportBuilder rb("context-shift", "correct placements", b, options);
  const std::vector<Term> boards = enumerate_terms(b, Sort::BoardTerm);
  const std::vector<Term> pool = b.elements();
  const std::vector<Term> witnesses = default_witness_pool(b.max_numeral);
  // with_head[p][x] = [pool[p] | boards[x]]
  std::vector<std::vector<Term>> with_head(pool.size());
  for (std::size_t p = 0; p < pool.size(); ++p) {
    for (const Term& x : boards) with_head[p].push_back(cons(pool[p], x));
  }
  rb.component("forward");
  rb.component("backward");
  Count fwd_n = 0, bwd_n = 0, fwd_bad = 0, bwd_bad = 0;
  for (const Term& cs : boards) {
    for (std::size_t u = 0; u < boards.size(); ++u) {
      for (std::size_t d = 0; d < boards.size(); ++d) {
        for (std::size_t i = 1; i <= b.max_numeral; ++i) {
          for (std::size_t m = 1; m <= i; ++m) {
            for (std::size_t tp = 0; tp < pool.size(); ++tp) {
              for (std::size_t t = 0; t < pool.size(); ++t) {
                ++fwd_n;
                if (shift_context_forward({cs, boards[u], boards[d], with_head[t][u], with_head[tp][d]}, m, i)) continue;
                ++fwd_bad;
                rb.add_example("cs=" + detail::term_text(cs) + " us=" + detail::term_text(boards[u]) +
                                   " ds=" + detail::term_text(boards[d]) + " t=" + detail::term_text(pool[t]) +
                                   " t'=" + detail::term_text(pool[tp]) + " m=" + std::to_string(m) +
                                   " i=" + std::to_string(i),
                               "antecedent holds, consequent fails", "forward");
              }
              ++bwd_n;
              const BackwardShift r =
                  shift_context_backward({cs, boards[u], boards[d], boards[u], with_head[tp][d]}, m, i, witnesses);
              if (r.ok()) continue;
              ++bwd_bad;
              rb.add_example("cs=" + detail::term_text(cs) + " us=" + detail::term_text(boards[u]) +
                                 " ds=" + detail::term_text(boards[d]) + " t'=" + detail::term_text(pool[tp]) +
                                 " m=" + std::to_string(m) + " i=" + std::to_string(i),
                             "antecedent holds, no witness t in the pool", "backward");
            }
          }
        }
      }
    }
  }
  rb.component("forward").instances_checked = fwd_n;
  rb.component("backward").instances_checked = bwd_n;
  rb.report().instances_checked = sat_add(fwd_n, bwd_n);
  rb.add_counterexamples(rb.component("forward"), fwd_bad);
  rb.add_counterexamples(rb.component("backward"), bwd_bad);
  return rb.finish();
}

}  // namespace dq
