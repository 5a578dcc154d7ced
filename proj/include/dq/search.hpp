// Exhaustive search over the ground completions of a tuple of partial terms.
//
// The search keeps a tuple of pattern terms and a list of pending variables,
// each with a refinement Domain. At every node an evaluator judges the whole
// subtree: Holds (every completion is fine), Violated (every completion is a
// counterexample) or Open. Open nodes refine one pending variable, by default
// the first; the element and tail variables introduced by a cons refinement
// take the refined variable's place. Leaf
// nodes (no pending variables) must be decided. Every completion is accounted
// for exactly once, either at a decided inner node (with the subtree size) or
// at a leaf.

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dq/term.hpp"
#include "dq/universe.hpp"

namespace dq {

enum class Verdict : std::uint8_t { Holds, Violated, Open };

struct PendingVar {
  Term var;
  Domain domain;
};

struct SearchNode {
  std::vector<Term> terms;
  std::vector<PendingVar> pending;

  bool is_leaf() const { return pending.empty(); }

  const Domain* domain_of(VarId id) const {
    for (const PendingVar& p : pending) {
      if (p.var.var_id() == id) return &p.domain;
    }
    return nullptr;
  }
};

struct SearchLimits {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
};

struct SearchStats {
  Count holds = 0;
  Count violated = 0;
  std::uint64_t nodes = 0;
  bool budget_exhausted = false;
  bool stopped = false;  // a callback asked to stop
};

inline Count subtree_count(const SearchNode& node, const UniverseBounds& b) {
  Count c = 1;
  for (const PendingVar& p : node.pending) c = sat_mul(c, domain_count(p.domain, b));
  return c;
}

namespace detail {

inline SearchNode bind_at(const SearchNode& node, std::size_t idx, const Refinement& r) {
  SearchNode child;
  const PendingVar& chosen = node.pending[idx];
  Substitution s;
  s.bind(chosen.var, r.value);
  child.terms.reserve(node.terms.size());
  for (const Term& t : node.terms) child.terms.push_back(apply(s, t));
  child.pending.reserve(node.pending.size());
  child.pending.insert(child.pending.end(), node.pending.begin(), node.pending.begin() + idx);
  for (const auto& [v, d] : r.introduced) child.pending.push_back({v, d});
  child.pending.insert(child.pending.end(), node.pending.begin() + idx + 1, node.pending.end());
  return child;
}

struct FirstPending {
  std::size_t operator()(const SearchNode&) const { return 0; }
};

template <class Eval, class OnDecided, class Choose>
void search_rec(const SearchNode& node, const UniverseBounds& b, Eval& eval, OnDecided& on_decided, Choose& choose,
                const SearchLimits& limits, SearchStats& stats) {
  if (stats.stopped || stats.budget_exhausted) return;
  if (limits.max_nodes && stats.nodes >= limits.max_nodes) {
    stats.budget_exhausted = true;
    return;
  }
  ++stats.nodes;
  const Verdict v = eval(node);
  if (v == Verdict::Open) {
    if (node.is_leaf()) throw std::logic_error("evaluator left a ground node undecided");
    std::size_t idx = choose(node);
    if (idx >= node.pending.size()) idx = 0;
    for (const Refinement& r : refine(node.pending[idx].domain, b)) {
      search_rec(bind_at(node, idx, r), b, eval, on_decided, choose, limits, stats);
      if (stats.stopped || stats.budget_exhausted) return;
    }
    return;
  }
  const Count c = subtree_count(node, b);
  if (v == Verdict::Holds) {
    stats.holds = sat_add(stats.holds, c);
  } else {
    stats.violated = sat_add(stats.violated, c);
  }
  if (!on_decided(node, v, c)) stats.stopped = true;
}

template <class Fn>
bool completions_rec(const SearchNode& node, const UniverseBounds& b, Count& budget, Fn& fn) {
  if (budget == 0) return false;
  if (node.is_leaf()) {
    --budget;
    return fn(node.terms);
  }
  for (const Refinement& r : refine(node.pending.front().domain, b)) {
    if (!completions_rec(bind_at(node, 0, r), b, budget, fn)) return false;
  }
  return true;
}

}  // namespace detail

// Runs the search. eval(const SearchNode&) -> Verdict;
// on_decided(const SearchNode&, Verdict, Count) -> bool (false stops);
// choose(const SearchNode&) -> index of the pending variable to refine.
template <class Eval, class OnDecided, class Choose>
SearchStats refine_search(const SearchNode& root, const UniverseBounds& b, Eval eval, OnDecided on_decided,
                          Choose choose, const SearchLimits& limits = {}) {
  SearchStats stats;
  detail::search_rec(root, b, eval, on_decided, choose, limits, stats);
  return stats;
}

template <class Eval, class OnDecided>
SearchStats refine_search(const SearchNode& root, const UniverseBounds& b, Eval eval, OnDecided on_decided,
                          const SearchLimits& limits = {}) {
  return refine_search(root, b, std::move(eval), std::move(on_decided), detail::FirstPending{}, limits);
}

// Visits up to `limit` ground completions of a node, in refinement order.
// fn(const std::vector<Term>&) -> bool (false stops).
template <class Fn>
void for_each_completion(const SearchNode& node, const UniverseBounds& b, Count limit, Fn fn) {
  detail::completions_rec(node, b, limit, fn);
}

}  // namespace dq
