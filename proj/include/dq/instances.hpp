// Instantiation schemas and bounded ground instances of clauses.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dq/search.hpp"
#include "dq/term.hpp"
#include "dq/universe.hpp"

namespace dq {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sort of every variable of one clause, keyed by variable id.
using InstantiationSchema = std::map<VarId, Sort>;

namespace detail {

enum class Context { Numeral, Board, Any };

inline void assign_sorts(const Term& t, Context ctx, InstantiationSchema& out) {
  if (t.is_ground()) return;
  if (t.is_var()) {
    const Sort s = ctx == Context::Numeral ? Sort::Numeral : ctx == Context::Board ? Sort::BoardTerm : Sort::AnyPoolTerm;
    out.try_emplace(t.var_id(), s);
    return;
  }
  if (ctx == Context::Numeral && is_succ(t)) {
    assign_sorts(t.arg(0), Context::Numeral, out);
  } else if (ctx == Context::Board && is_cons(t)) {
    assign_sorts(t.arg(0), Context::Any, out);
    assign_sorts(t.arg(1), Context::Board, out);
  } else {
    for (const Term& a : t.args()) assign_sorts(a, Context::Any, out);
  }
}

inline void assign_atom_sorts(const Atom& a, InstantiationSchema& out) {
  const std::vector<Sort> sorts = argument_sorts(a.predicate(), a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) {
    const Context ctx = sorts[i] == Sort::Numeral     ? Context::Numeral
                        : sorts[i] == Sort::BoardTerm ? Context::Board
                                                      : Context::Any;
    assign_sorts(a.arg(i), ctx, out);
  }
}

}  // namespace detail

// Sorts inferred from positions, first occurrence wins (head first, then the
// body left to right): a variable in a numeral argument or under s/1 there
// is a Numeral; one in a board argument, at top level or in a list tail, is a
// BoardTerm; anything else (list elements, other functors) is AnyPoolTerm.
inline InstantiationSchema default_schema(const Clause& c) {
  InstantiationSchema s;
  detail::assign_atom_sorts(c.head, s);
  for (const Atom& b : c.body) detail::assign_atom_sorts(b, s);
  return s;
}

inline InstantiationSchema uniform_schema(const Clause& c, Sort sort) {
  InstantiationSchema s;
  for (const Term& v : clause_vars(c)) s.emplace(v.var_id(), sort);
  return s;
}

// Overrides sorts of named variables. Unknown names are a configuration error.
inline InstantiationSchema override_sorts(const Clause& c, InstantiationSchema schema,
                                          const std::map<std::string, Sort>& by_name) {
  const std::vector<Term> vars = clause_vars(c);
  for (const auto& [name, sort] : by_name) {
    auto it = std::find_if(vars.begin(), vars.end(), [&](const Term& v) { return v.var_name() == name; });
    if (it == vars.end()) throw ConfigError("clause has no variable named " + name);
    schema[it->var_id()] = sort;
  }
  return schema;
}

inline void require_complete(const Clause& c, const InstantiationSchema& schema) {
  for (const Term& v : clause_vars(c)) {
    if (!schema.count(v.var_id())) {
      throw ConfigError("instantiation schema has no sort for variable " +
                        (v.var_name().empty() ? "_" : v.var_name()));
    }
  }
}

// Refinement order for searches over a clause: variables shared by more
// atoms first, ties broken by first occurrence. Singleton variables (often
// '_') come last, so they are only refined where they matter.
inline std::vector<Term> search_order(const Clause& c) {
  std::vector<Term> vars = clause_vars(c);
  std::vector<std::size_t> atoms_with(vars.size(), 0);
  auto count_in = [&](const Atom& a) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (occurs(vars[i].var_id(), a.as_term())) ++atoms_with[i];
    }
  };
  count_in(c.head);
  for (const Atom& b : c.body) count_in(b);
  std::vector<std::size_t> idx(vars.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return atoms_with[x] > atoms_with[y]; });
  std::vector<Term> out;
  for (std::size_t i : idx) out.push_back(vars[i]);
  return out;
}

// Search root whose terms are [head, body...] and whose pending variables are
// the clause variables in search order.
inline SearchNode clause_search_root(const Clause& c, const InstantiationSchema& schema, const UniverseBounds& b) {
  require_complete(c, schema);
  SearchNode root;
  root.terms.push_back(c.head.as_term());
  for (const Atom& a : c.body) root.terms.push_back(a.as_term());
  for (const Term& v : search_order(c)) root.pending.push_back({v, Domain::of(schema.at(v.var_id()), b)});
  return root;
}

inline Clause clause_from_terms(const std::vector<Term>& terms) {
  Clause c{Atom(terms.front()), {}};
  for (std::size_t i = 1; i < terms.size(); ++i) c.body.emplace_back(terms[i]);
  return c;
}

// Streams every ground instance of a clause with each variable replaced by
// every term of its sort, as an odometer over the variables in first
// occurrence order (the last variable varies fastest).
class GroundInstanceStream {
 public:
  GroundInstanceStream(Clause clause, const UniverseBounds& b, const InstantiationSchema& schema)
      : clause_(std::move(clause)), vars_(clause_vars(clause_)) {
    require_complete(clause_, schema);
    for (const Term& v : vars_) values_.push_back(enumerate_terms(b, schema.at(v.var_id())));
    idx_.assign(vars_.size(), 0);
    done_ = std::any_of(values_.begin(), values_.end(), [](const auto& v) { return v.empty(); });
  }

  Count count() const {
    Count c = 1;
    for (const auto& v : values_) c = sat_mul(c, v.size());
    return c;
  }

  std::optional<Clause> next() {
    if (done_) return std::nullopt;
    Substitution s;
    for (std::size_t i = 0; i < vars_.size(); ++i) s.bind(vars_[i], values_[i][idx_[i]]);
    Clause out = apply(s, clause_);
    std::size_t pos = vars_.size();
    while (pos > 0 && ++idx_[pos - 1] == values_[pos - 1].size()) idx_[--pos] = 0;
    if (pos == 0) done_ = true;
    return out;
  }

 private:
  Clause clause_;
  std::vector<Term> vars_;
  std::vector<std::vector<Term>> values_;
  std::vector<std::size_t> idx_;
  bool done_ = false;
};

inline GroundInstanceStream ground_instances(const Clause& clause, const UniverseBounds& b,
                                             const InstantiationSchema& schema) {
  return GroundInstanceStream(clause, b, schema);
}

}  // namespace dq
