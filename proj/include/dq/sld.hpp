// SLD resolution: leftmost selection, clauses in textual order, depth-first.
//
// Terms live on a heap of cells while solving. Clauses are compiled once into
// relocatable cell templates and copied onto the heap for each resolution
// step; bindings are trailed and undone on backtracking.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "dq/term.hpp"

namespace dq {

struct SolveLimits {
  std::size_t max_depth = 10000;           // resolution steps along one branch
  std::optional<std::size_t> max_answers;  // unset = unlimited
};

enum class SolveStatus {
  Running,      // more answers may follow
  Exhausted,    // the whole SLD tree was explored
  Incomplete,   // exploration finished, but some branch hit the depth limit
  AnswerLimit,  // stopped after max_answers
};

inline std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Running: return "running";
    case SolveStatus::Exhausted: return "exhausted";
    case SolveStatus::Incomplete: return "incomplete";
    case SolveStatus::AnswerLimit: return "answer-limit";
  }
  return "?";
}

namespace detail {

struct Cell {
  enum Tag : std::uint8_t { Ref, Fun, Con } tag;
  std::uint32_t a;  // Ref: target address; Fun, Con: functor id
  std::uint32_t n;  // Fun: arity
};

struct CompiledClause {
  std::vector<Cell> cells;
  std::uint32_t head;
  std::vector<std::uint32_t> body;
  std::optional<std::uint32_t> first_arg_functor;  // nullopt: variable or no arguments
};

class FunctorTable {
 public:
  std::uint32_t intern(const std::string& name, std::size_t arity) {
    auto [it, inserted] = ids_.try_emplace(name + "/" + std::to_string(arity), names_.size());
    if (inserted) names_.emplace_back(name, arity);
    return it->second;
  }
  const std::string& name(std::uint32_t id) const { return names_[id].first; }

 private:
  std::unordered_map<std::string, std::uint32_t> ids_;
  std::vector<std::pair<std::string, std::size_t>> names_;
};

// Writes terms into a cell vector. Variables are allocated on first sight.
class TermWriter {
 public:
  TermWriter(std::vector<Cell>& out, FunctorTable& functors) : out_(out), functors_(functors) {}

  // Address of a cell standing for t (a Con or Fun cell, or a variable).
  std::uint32_t root(const Term& t) {
    if (t.is_var()) return var_addr(t);
    if (t.arity() == 0) {
      out_.push_back({Cell::Con, functors_.intern(t.functor(), 0), 0});
      return static_cast<std::uint32_t>(out_.size() - 1);
    }
    return compound(t);
  }

  const std::unordered_map<VarId, std::uint32_t>& vars() const { return vars_; }

 private:
  std::uint32_t var_addr(const Term& v) {
    auto it = vars_.find(v.var_id());
    if (it != vars_.end()) return it->second;
    const auto addr = static_cast<std::uint32_t>(out_.size());
    out_.push_back({Cell::Ref, addr, 0});
    vars_.emplace(v.var_id(), addr);
    return addr;
  }

  std::uint32_t compound(const Term& t) {
    const auto h = static_cast<std::uint32_t>(out_.size());
    out_.push_back({Cell::Fun, functors_.intern(t.functor(), t.arity()), static_cast<std::uint32_t>(t.arity())});
    out_.resize(out_.size() + t.arity(), Cell{Cell::Con, 0, 0});
    for (std::size_t i = 0; i < t.arity(); ++i) out_[h + 1 + i] = arg_cell(t.arg(i));
    return h;
  }

  Cell arg_cell(const Term& t) {
    if (t.is_var()) return {Cell::Ref, var_addr(t), 0};
    if (t.arity() == 0) return {Cell::Con, functors_.intern(t.functor(), 0), 0};
    return {Cell::Ref, compound(t), 0};
  }

  std::vector<Cell>& out_;
  FunctorTable& functors_;
  std::unordered_map<VarId, std::uint32_t> vars_;
};

}  // namespace detail

// Streams computed answer substitutions for a query. Each answer binds only
// query variables; variables left unbound are omitted, and variables created
// during the derivation appear as fresh variables.
class SldSolver {
 public:
  SldSolver(const Program& program, std::vector<Atom> query, SolveLimits limits = {})
      : query_(std::move(query)), limits_(limits) {
    if (limits_.max_depth == 0) throw std::invalid_argument("max_depth must be at least 1");
    for (const Clause& c : program.clauses) compile(c);
    detail::TermWriter w(heap_, functors_);
    std::vector<std::uint32_t> roots;
    for (const Atom& a : query_) roots.push_back(w.root(a.as_term()));
    for (const auto& [id, addr] : w.vars()) query_vars_.emplace_back(id, addr);
    goal_ = kNoGoal;
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) goal_ = push_goal(*it, goal_);
  }

  std::optional<Substitution> next() {
    if (status_ != SolveStatus::Running) return std::nullopt;
    if (limits_.max_answers && answers_ >= *limits_.max_answers) {
      status_ = SolveStatus::AnswerLimit;
      return std::nullopt;
    }
    if (resume_ && !backtrack()) return finish();
    resume_ = true;
    while (true) {
      if (goal_ == kNoGoal) {
        ++answers_;
        return answer();
      }
      if (depth_ >= limits_.max_depth) {
        depth_cut_ = true;
        if (!backtrack()) return finish();
        continue;
      }
      const Goal g = goals_[goal_];
      if (!try_clauses(g.term, g.next, 0, depth_) && !backtrack()) return finish();
    }
  }

  SolveStatus status() const { return status_; }
  bool depth_limit_hit() const { return depth_cut_; }
  std::size_t answers() const { return answers_; }
  std::uint64_t steps() const { return steps_; }

 private:
  static constexpr std::uint32_t kNoGoal = 0xffffffffu;

  struct Goal {
    std::uint32_t term;
    std::uint32_t next;
  };

  struct ChoicePoint {
    std::uint32_t goal_term;
    std::uint32_t rest;
    std::uint32_t next_candidate;
    std::size_t heap_top;
    std::size_t trail_top;
    std::size_t goals_top;
    std::size_t depth;
  };

  void compile(const Clause& c) {
    detail::CompiledClause cc;
    detail::TermWriter w(cc.cells, functors_);
    cc.head = w.root(c.head.as_term());
    for (const Atom& b : c.body) cc.body.push_back(w.root(b.as_term()));
    if (c.head.arity() > 0 && !c.head.arg(0).is_var()) {
      cc.first_arg_functor = functors_.intern(c.head.arg(0).functor(), c.head.arg(0).arity());
    }
    const std::uint32_t pred = functors_.intern(c.head.predicate(), c.head.arity());
    by_pred_[pred].push_back(static_cast<std::uint32_t>(clauses_.size()));
    clauses_.push_back(std::move(cc));
  }

  std::optional<Substitution> finish() {
    status_ = depth_cut_ ? SolveStatus::Incomplete : SolveStatus::Exhausted;
    return std::nullopt;
  }

  std::uint32_t push_goal(std::uint32_t term, std::uint32_t next) {
    goals_.push_back({term, next});
    return static_cast<std::uint32_t>(goals_.size() - 1);
  }

  std::uint32_t deref(std::uint32_t addr) const {
    while (heap_[addr].tag == detail::Cell::Ref && heap_[addr].a != addr) addr = heap_[addr].a;
    return addr;
  }

  bool unbound(std::uint32_t addr) const { return heap_[addr].tag == detail::Cell::Ref; }

  // Functor id of the term at a dereferenced address, if not a variable.
  std::optional<std::uint32_t> functor_at(std::uint32_t addr) const {
    if (unbound(addr)) return std::nullopt;
    return heap_[addr].a;
  }

  bool occurs(std::uint32_t var, std::uint32_t addr) const {
    std::vector<std::uint32_t> stack{addr};
    while (!stack.empty()) {
      const std::uint32_t x = deref(stack.back());
      stack.pop_back();
      if (x == var) return true;
      if (heap_[x].tag == detail::Cell::Fun) {
        for (std::uint32_t i = 1; i <= heap_[x].n; ++i) stack.push_back(x + i);
      }
    }
    return false;
  }

  void bind(std::uint32_t var, std::uint32_t target) {
    heap_[var].a = target;
    trail_.push_back(var);
  }

  bool unify(std::uint32_t x0, std::uint32_t y0) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> stack{{x0, y0}};
    while (!stack.empty()) {
      const std::uint32_t x = deref(stack.back().first), y = deref(stack.back().second);
      stack.pop_back();
      if (x == y) continue;
      const detail::Cell& cx = heap_[x];
      const detail::Cell& cy = heap_[y];
      if (cx.tag == detail::Cell::Ref || cy.tag == detail::Cell::Ref) {
        // Bind the younger variable, so older cells never point upward.
        std::uint32_t var = x, val = y;
        if (cx.tag != detail::Cell::Ref || (cy.tag == detail::Cell::Ref && y > x)) std::swap(var, val);
        if (occurs(var, val)) return false;
        bind(var, val);
        continue;
      }
      if (cx.tag != cy.tag || cx.a != cy.a) return false;
      if (cx.tag == detail::Cell::Fun) {
        for (std::uint32_t i = 1; i <= cx.n; ++i) stack.emplace_back(x + i, y + i);
      }
    }
    return true;
  }

  void undo_to(std::size_t heap_top, std::size_t trail_top, std::size_t goals_top) {
    while (trail_.size() > trail_top) {
      const std::uint32_t v = trail_.back();
      trail_.pop_back();
      if (v < heap_top) heap_[v].a = v;
    }
    heap_.resize(heap_top);
    goals_.resize(goals_top);
  }

  bool candidate(std::uint32_t clause, std::optional<std::uint32_t> goal_first) const {
    const auto& f = clauses_[clause].first_arg_functor;
    return !f || !goal_first || *f == *goal_first;
  }

  // Resolves the goal with candidate clauses from position `from` on. On
  // success the goal list and depth are updated and a choice point is left if
  // later candidates remain.
  bool try_clauses(std::uint32_t goal_term, std::uint32_t rest, std::uint32_t from, std::size_t depth) {
    const std::uint32_t g = deref(goal_term);
    const std::uint32_t pred = heap_[g].a;
    auto it = by_pred_.find(pred);
    if (it == by_pred_.end()) return false;
    const std::vector<std::uint32_t>& cands = it->second;
    std::optional<std::uint32_t> first;
    if (heap_[g].tag == detail::Cell::Fun && heap_[g].n > 0) first = functor_at(deref(g + 1));
    const std::size_t heap_top = heap_.size(), trail_top = trail_.size(), goals_top = goals_.size();
    for (std::uint32_t k = from; k < cands.size(); ++k) {
      if (!candidate(cands[k], first)) continue;
      ++steps_;
      const detail::CompiledClause& c = clauses_[cands[k]];
      const auto base = static_cast<std::uint32_t>(heap_.size());
      for (const detail::Cell& cell : c.cells) {
        heap_.push_back(cell.tag == detail::Cell::Ref ? detail::Cell{detail::Cell::Ref, cell.a + base, 0} : cell);
      }
      if (!unify(g, c.head + base)) {
        undo_to(heap_top, trail_top, goals_top);
        continue;
      }
      std::uint32_t k2 = k + 1;
      while (k2 < cands.size() && !candidate(cands[k2], first)) ++k2;
      if (k2 < cands.size()) choices_.push_back({goal_term, rest, k2, heap_top, trail_top, goals_top, depth});
      std::uint32_t list = rest;
      for (auto b = c.body.rbegin(); b != c.body.rend(); ++b) list = push_goal(*b + base, list);
      goal_ = list;
      depth_ = depth + 1;
      return true;
    }
    return false;
  }

  bool backtrack() {
    while (!choices_.empty()) {
      const ChoicePoint cp = choices_.back();
      choices_.pop_back();
      undo_to(cp.heap_top, cp.trail_top, cp.goals_top);
      if (try_clauses(cp.goal_term, cp.rest, cp.next_candidate, cp.depth)) return true;
    }
    return false;
  }

  Term read_term(std::uint32_t addr, std::unordered_map<std::uint32_t, Term>& vars) const {
    addr = deref(addr);
    const detail::Cell& c = heap_[addr];
    if (c.tag == detail::Cell::Ref) {
      auto it = vars.find(addr);
      if (it != vars.end()) return it->second;
      Term v = Term::fresh_var();
      vars.emplace(addr, v);
      return v;
    }
    if (c.tag == detail::Cell::Con) return Term::constant(functors_.name(c.a));
    std::vector<Term> args;
    args.reserve(c.n);
    for (std::uint32_t i = 1; i <= c.n; ++i) args.push_back(read_term(addr + i, vars));
    return Term::compound(functors_.name(c.a), std::move(args));
  }

  Substitution answer() const {
    std::unordered_map<std::uint32_t, Term> vars;
    std::unordered_map<VarId, Term> originals;
    for (const Atom& a : query_) {
      std::vector<Term> vs;
      collect_vars(a.as_term(), vs);
      for (const Term& v : vs) originals.emplace(v.var_id(), v);
    }
    // Query variables still unbound keep their identity.
    for (const auto& [id, addr] : query_vars_) {
      const std::uint32_t d = deref(addr);
      if (unbound(d) && !vars.count(d)) vars.emplace(d, originals.at(id));
    }
    std::vector<Substitution::Binding> bindings;
    for (const auto& [id, addr] : query_vars_) {
      Term value = read_term(addr, vars);
      const Term& var = originals.at(id);
      if (value.is_var() && value.var_id() == id) continue;
      bindings.push_back({var, std::move(value)});
    }
    return Substitution::from_bindings(std::move(bindings));
  }

  std::vector<Atom> query_;
  SolveLimits limits_;
  detail::FunctorTable functors_;
  std::vector<detail::CompiledClause> clauses_;
  std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> by_pred_;
  std::vector<std::pair<VarId, std::uint32_t>> query_vars_;

  std::vector<detail::Cell> heap_;
  std::vector<std::uint32_t> trail_;
  std::vector<Goal> goals_;
  std::vector<ChoicePoint> choices_;
  std::uint32_t goal_ = kNoGoal;
  std::size_t depth_ = 0;
  bool resume_ = false;
  bool depth_cut_ = false;
  SolveStatus status_ = SolveStatus::Running;
  std::size_t answers_ = 0;
  std::uint64_t steps_ = 0;
};

struct SolveResult {
  std::vector<Substitution> answers;
  SolveStatus status = SolveStatus::Exhausted;
};

inline SolveResult sld_solve(const Program& program, const std::vector<Atom>& query, const SolveLimits& limits = {}) {
  SldSolver solver(program, query, limits);
  SolveResult r;
  while (auto s = solver.next()) r.answers.push_back(std::move(*s));
  r.status = solver.status();
  return r;
}

}  // namespace dq
