// Bounded least Herbrand model.
//
// The ground model is far too large to materialize even at small bounds
// (pqs(0,_,_,_) alone has |boards|^3 instances), so the fixpoint is computed
// over non-ground generators: each generator stands for all of its ground
// instances. A consequence step resolves every clause body against the
// current generators (bottom-up, semi-naive) and keeps a head only if it can
// still have an instance in the bounded base. Every ground instance of a
// generator is a logical consequence of the program.
//
// Derivations run at inflated bounds: list length L + N + 1, numerals up to
// N. Membership queries are answered for the target bounds.

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dq/search.hpp"
#include "dq/term.hpp"
#include "dq/tri.hpp"
#include "dq/universe.hpp"

namespace dq {

struct ModelOptions {
  std::size_t max_generators = 500000;
  std::size_t max_rounds = 0;  // 0 = until fixpoint
};

inline UniverseBounds derivation_bounds_for(const UniverseBounds& target) {
  return target.with_list_len(target.max_list_len + target.max_numeral + 1);
}

using PredicateKey = std::pair<std::string, std::size_t>;

inline std::vector<PredicateKey> head_predicates(const Program& p) {
  std::vector<PredicateKey> out;
  for (const Clause& c : p.clauses) {
    PredicateKey k{c.head.predicate(), c.head.arity()};
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline bool atom_can_inhabit(const Term& a, const UniverseBounds& b) {
  const std::vector<Sort> sorts = argument_sorts(a.functor(), a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!can_inhabit(a.arg(i), sorts[i], b)) return false;
  }
  return true;
}

// Finds a variable of `a` that blocks matching against generator `g`: one
// facing structure in g, failing that one facing a variable that g repeats.
inline void blocking_var(const Term& g, const Term& a, const std::map<VarId, int>& g_counts,
                         std::optional<VarId>& structural, std::optional<VarId>& repeated) {
  if (structural) return;
  if (a.is_var()) {
    if (!g.is_var()) {
      structural = a.var_id();
    } else if (!repeated && g_counts.at(g.var_id()) > 1) {
      repeated = a.var_id();
    }
    return;
  }
  if (g.is_var() || a.is_ground()) return;
  for (std::size_t i = 0; i < a.arity() && i < g.arity(); ++i) blocking_var(g.arg(i), a.arg(i), g_counts, structural, repeated);
}

inline void count_vars(const Term& t, std::map<VarId, int>& out) {
  if (t.is_ground()) return;
  if (t.is_var()) {
    ++out[t.var_id()];
    return;
  }
  for (const Term& x : t.args()) count_vars(x, out);
}

}  // namespace detail

class Interpretation {
 public:
  Interpretation() = default;
  Interpretation(UniverseBounds bounds, UniverseBounds derivation_bounds, std::vector<PredicateKey> predicates)
      : bounds_(std::move(bounds)), derivation_bounds_(std::move(derivation_bounds)), predicates_(std::move(predicates)) {}

  const UniverseBounds& bounds() const { return bounds_; }
  const UniverseBounds& derivation_bounds() const { return derivation_bounds_; }
  const std::vector<PredicateKey>& predicates() const { return predicates_; }
  bool is_fixpoint() const { return fixpoint_; }
  std::size_t rounds() const { return rounds_; }

  // All generators, sorted.
  std::vector<Atom> generators() const {
    std::vector<Atom> out;
    for (const auto& [k, gs] : by_pred_) out.insert(out.end(), gs.begin(), gs.end());
    std::sort(out.begin(), out.end());
    return out;
  }
  const std::vector<Atom>& generators_of(const PredicateKey& k) const {
    static const std::vector<Atom> none;
    auto it = by_pred_.find(k);
    return it == by_pred_.end() ? none : it->second;
  }
  std::size_t generator_count() const {
    std::size_t n = 0;
    for (const auto& [k, gs] : by_pred_) n += gs.size();
    return n;
  }

  // Is the atom an instance of a generator? Bounds are not consulted.
  bool derives(const Atom& a) const {
    for (const Atom& g : generators_of({a.predicate(), a.arity()})) {
      if (is_instance_of(a.as_term(), g.as_term())) return true;
    }
    return false;
  }

  // Ground membership: inside the target bounded base and derived.
  bool contains(const Atom& a) const { return in_bounded_base(a, bounds_) && derives(a); }

  // Three-valued version of derives() for a partial atom: True when every
  // completion is derived, False when none is. On Unknown, *open receives the
  // first generator that might still match.
  Tri contains3(const Term& a, const Atom** open = nullptr) const {
    if (a.is_var()) return Tri::Unknown;
    Tri r = Tri::False;
    for (const Atom& g : generators_of({a.functor(), a.arity()})) {
      if (!may_equal(g.as_term(), a)) continue;
      if (match(g.as_term(), a)) return Tri::True;
      if (r == Tri::False && unify(rename_apart(g.as_term()), a)) {
        r = Tri::Unknown;
        if (open) *open = &g;
      }
    }
    return r;
  }

  // Visits the ground atoms of the target base that are in the model, per
  // predicate in sorted order and then in refinement order. fn(const Atom&)
  // returns false to stop. Returns false if stopped.
  template <class Fn>
  bool for_each_atom(Fn fn) const {
    for (const PredicateKey& k : predicates_) {
      bool go = true;
      search_atoms(k, [&](const SearchNode& n, Verdict v, Count) {
        if (v != Verdict::Holds) return true;
        for_each_completion(n, bounds_, kCountMax, [&](const std::vector<Term>& ts) {
          go = fn(Atom(ts[0]));
          return go;
        });
        return go;
      });
      if (!go) return false;
    }
    return true;
  }

  // Number of ground atoms of the target base in the model.
  Count count() const {
    Count total = 0;
    for (const PredicateKey& k : predicates_) {
      total = sat_add(total, search_atoms(k, [](const SearchNode&, Verdict, Count) { return true; }).holds);
    }
    return total;
  }

  // Refinement choice for a search over single atoms: a variable blocking a
  // generator that might still match.
  std::size_t choose(const SearchNode& n, const Atom* open) const {
    if (!open) return 0;
    std::map<VarId, int> counts;
    detail::count_vars(open->as_term(), counts);
    std::optional<VarId> structural, repeated;
    detail::blocking_var(open->as_term(), n.terms[0], counts, structural, repeated);
    const std::optional<VarId> pick = structural ? structural : repeated;
    for (std::size_t i = 0; pick && i < n.pending.size(); ++i) {
      if (n.pending[i].var.var_id() == *pick) return i;
    }
    return 0;
  }

  // Runs a search over the atoms of one predicate in the target base,
  // reporting decided regions as Holds (in the model) or Violated (not).
  template <class OnDecided>
  SearchStats search_atoms(const PredicateKey& k, OnDecided on_decided, const SearchLimits& limits = {}) const {
    const Atom* open = nullptr;
    return refine_search(
        atom_root(k), bounds_,
        [&](const SearchNode& n) {
          open = nullptr;
          const Tri t = contains3(n.terms[0], &open);
          return t == Tri::True ? Verdict::Holds : t == Tri::False ? Verdict::Violated : Verdict::Open;
        },
        on_decided, [&](const SearchNode& n) { return choose(n, open); }, limits);
  }

  // Search root ranging over all atoms of one predicate in the target base.
  SearchNode atom_root(const PredicateKey& k) const {
    SearchNode root;
    std::vector<Term> args;
    const std::vector<Sort> sorts = argument_sorts(k.first, k.second);
    for (std::size_t i = 0; i < k.second; ++i) {
      Term v = Term::fresh_var();
      args.push_back(v);
      root.pending.push_back({v, Domain::of(sorts[i], bounds_)});
    }
    root.terms.push_back(Term::compound(k.first, std::move(args)));
    return root;
  }

  // Adds a generator unless an existing one subsumes it; drops generators it
  // subsumes. Returns whether it was added.
  bool add(const Atom& g) {
    std::vector<Atom>& gs = by_pred_[{g.predicate(), g.arity()}];
    for (const Atom& old : gs) {
      if (is_instance_of(g.as_term(), old.as_term())) return false;
    }
    std::erase_if(gs, [&](const Atom& old) { return is_instance_of(old.as_term(), g.as_term()); });
    gs.push_back(g);
    return true;
  }

  void set_fixpoint(bool f) { fixpoint_ = f; }
  void set_rounds(std::size_t r) { rounds_ = r; }

 private:
  UniverseBounds bounds_;
  UniverseBounds derivation_bounds_;
  std::vector<PredicateKey> predicates_;
  std::map<PredicateKey, std::vector<Atom>> by_pred_;
  bool fixpoint_ = false;
  std::size_t rounds_ = 0;
};

namespace detail {

// Resolves the body of `c` left to right against the generators in `pool`,
// calling emit(head) for each complete join that used at least one generator
// marked new.
template <class Emit>
void join_body(const Clause& c, std::size_t k, bool used_new,
               const std::map<PredicateKey, std::vector<std::pair<Atom, bool>>>& pool, const UniverseBounds& b,
               Emit& emit) {
  if (k == c.body.size()) {
    if (used_new) emit(c.head);
    return;
  }
  auto it = pool.find({c.body[k].predicate(), c.body[k].arity()});
  if (it == pool.end()) return;
  for (const auto& [g, is_new] : it->second) {
    const std::optional<Substitution> s = unify(c.body[k].as_term(), rename_apart(g.as_term()));
    if (!s) continue;
    const Clause next = apply(*s, c);
    if (!atom_can_inhabit(next.head.as_term(), b)) continue;
    join_body(next, k + 1, used_new || is_new, pool, b, emit);
  }
}

inline std::map<PredicateKey, std::vector<std::pair<Atom, bool>>> generator_pool(
    const Interpretation& m, const std::vector<Atom>& fresh) {
  std::map<PredicateKey, std::vector<std::pair<Atom, bool>>> pool;
  std::unordered_set<Term, TermHash> is_fresh;
  for (const Atom& g : fresh) is_fresh.insert(g.as_term());
  for (const Atom& g : m.generators()) {
    const bool is_new = is_fresh.count(g.as_term()) > 0;
    pool[{g.predicate(), g.arity()}].emplace_back(g, is_new);
  }
  return pool;
}

}  // namespace detail

// Heads derivable in one step from the generators of m (all of them treated
// as new) that m does not already subsume.
inline std::vector<Atom> consequence_step(const Program& p, const Interpretation& m) {
  const UniverseBounds& b = m.derivation_bounds();
  const std::vector<Atom> all = m.generators();
  const auto pool = detail::generator_pool(m, all);
  std::vector<Atom> out;
  auto emit = [&](const Atom& h) {
    if (!m.derives(h) && std::none_of(out.begin(), out.end(), [&](const Atom& o) { return is_instance_of(h.as_term(), o.as_term()); })) {
      out.push_back(h);
    }
  };
  for (const Clause& c : p.clauses) {
    const Clause r = rename_apart(c);
    if (!detail::atom_can_inhabit(r.head.as_term(), b)) continue;
    detail::join_body(r, 0, r.body.empty(), pool, b, emit);
  }
  return out;
}

inline Interpretation bounded_model(const Program& p, const UniverseBounds& bounds, const ModelOptions& options = {}) {
  Interpretation m(bounds, derivation_bounds_for(bounds), head_predicates(p));
  const UniverseBounds& b = m.derivation_bounds();
  std::vector<Atom> fresh;
  for (const Clause& c : p.clauses) {
    if (!c.body.empty()) continue;
    const Clause r = rename_apart(c);
    if (detail::atom_can_inhabit(r.head.as_term(), b) && m.add(r.head)) fresh.push_back(r.head);
  }
  std::size_t round = 0;
  while (!fresh.empty()) {
    if (options.max_rounds && round >= options.max_rounds) {
      m.set_rounds(round);
      return m;
    }
    ++round;
    const auto pool = detail::generator_pool(m, fresh);
    std::vector<Atom> next;
    bool overflow = false;
    auto emit = [&](const Atom& h) {
      if (overflow) return;
      if (m.add(h)) {
        std::erase_if(next, [&](const Atom& o) { return is_instance_of(o.as_term(), h.as_term()); });
        next.push_back(h);
      }
      if (m.generator_count() > options.max_generators) overflow = true;
    };
    for (const Clause& c : p.clauses) {
      if (c.body.empty()) continue;
      detail::join_body(rename_apart(c), 0, false, pool, b, emit);
      if (overflow) break;
    }
    if (overflow) {
      m.set_rounds(round);
      return m;
    }
    // Generators added and then subsumed within the round are gone from m.
    std::erase_if(next, [&](const Atom& h) {
      const auto& gs = m.generators_of({h.predicate(), h.arity()});
      return std::find(gs.begin(), gs.end(), h) == gs.end();
    });
    fresh = std::move(next);
  }
  m.set_rounds(round);
  m.set_fixpoint(true);
  return m;
}

}  // namespace dq
