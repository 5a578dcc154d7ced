// Program edits for negative controls, and their compact text form
// kind:clause:arg used on the command line.

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dq/instances.hpp"
#include "dq/printer.hpp"
#include "dq/term.hpp"

namespace dq {

// Clause, atom and argument indices are 1-based.
struct DropClause {
  std::size_t clause;
};
struct SwapArgs {  // swaps two head arguments
  std::size_t clause, a, b;
};
struct UnshiftHead {  // [H|T] -> T in a head argument
  std::size_t clause, arg;
};
struct ShiftBody {  // T -> [_|T] in an argument of a body atom (arg 1 if omitted)
  std::size_t clause, atom, arg;
};
struct SelfLoop {  // appends p(X1..Xn) :- p(X1..Xn)
  std::string predicate;
  std::size_t arity;
};

using Mutation = std::variant<DropClause, SwapArgs, UnshiftHead, ShiftBody, SelfLoop>;

inline std::string to_string(const Mutation& m) {
  struct V {
    std::string operator()(const DropClause& x) const { return "drop-clause:" + std::to_string(x.clause); }
    std::string operator()(const SwapArgs& x) const {
      return "swap-args:" + std::to_string(x.clause) + ":" + std::to_string(x.a) + "," + std::to_string(x.b);
    }
    std::string operator()(const UnshiftHead& x) const {
      return "unshift-head:" + std::to_string(x.clause) + ":" + std::to_string(x.arg);
    }
    std::string operator()(const ShiftBody& x) const {
      return "shift-body:" + std::to_string(x.clause) + ":" + std::to_string(x.atom) + ":" + std::to_string(x.arg);
    }
    std::string operator()(const SelfLoop& x) const { return "self-loop:" + x.predicate + "/" + std::to_string(x.arity); }
  };
  return std::visit(V{}, m);
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t p = s.find(sep, start);
    out.push_back(s.substr(start, p - start));
    if (p == std::string::npos) return out;
    start = p + 1;
  }
}

inline std::size_t parse_index(const std::string& s, const std::string& spec) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9) {
    throw ConfigError("bad index '" + s + "' in mutation '" + spec + "'");
  }
  const std::size_t v = std::stoul(s);
  if (v == 0) throw ConfigError("indices are 1-based in mutation '" + spec + "'");
  return v;
}

inline Atom with_arg(const Atom& a, std::size_t idx, Term value) {
  std::vector<Term> args(a.args().begin(), a.args().end());
  args[idx] = std::move(value);
  return Atom(a.predicate(), std::move(args));
}

}  // namespace detail

// drop-clause:C | swap-args:C:A,B | unshift-head:C:A | shift-body:C:B[:A] | self-loop:p/n
inline Mutation parse_mutation(const std::string& spec) {
  const std::vector<std::string> f = detail::split(spec, ':');
  auto idx = [&](std::size_t k) { return detail::parse_index(f[k], spec); };
  const std::string& kind = f[0];
  if (kind == "drop-clause" && f.size() == 2) return DropClause{idx(1)};
  if (kind == "swap-args" && f.size() == 3) {
    const std::vector<std::string> ab = detail::split(f[2], ',');
    if (ab.size() != 2) throw ConfigError("swap-args needs two positions A,B in '" + spec + "'");
    return SwapArgs{idx(1), detail::parse_index(ab[0], spec), detail::parse_index(ab[1], spec)};
  }
  if (kind == "unshift-head" && f.size() == 3) return UnshiftHead{idx(1), idx(2)};
  if (kind == "shift-body" && (f.size() == 3 || f.size() == 4)) return ShiftBody{idx(1), idx(2), f.size() == 4 ? idx(3) : 1};
  if (kind == "self-loop" && f.size() == 2) {
    const std::vector<std::string> pa = detail::split(f[1], '/');
    if (pa.size() != 2 || pa[0].empty()) throw ConfigError("self-loop needs p/n in '" + spec + "'");
    return SelfLoop{pa[0], detail::parse_index(pa[1], spec)};
  }
  throw ConfigError("unrecognised mutation '" + spec + "'");
}

inline Program mutate(const Program& program, const Mutation& m) {
  Program p = program;
  auto clause_at = [&](std::size_t c) -> Clause& {
    if (c == 0 || c > p.clauses.size()) {
      throw ConfigError("mutation " + to_string(m) + ": no clause " + std::to_string(c));
    }
    return p.clauses[c - 1];
  };
  auto check_arg = [&](const Atom& a, std::size_t arg) {
    if (arg == 0 || arg > a.arity()) {
      throw ConfigError("mutation " + to_string(m) + ": " + a.predicate() + "/" + std::to_string(a.arity()) +
                        " has no argument " + std::to_string(arg));
    }
  };
  if (const auto* x = std::get_if<DropClause>(&m)) {
    clause_at(x->clause);
    p.clauses.erase(p.clauses.begin() + static_cast<std::ptrdiff_t>(x->clause - 1));
  } else if (const auto* x = std::get_if<SwapArgs>(&m)) {
    Clause& c = clause_at(x->clause);
    check_arg(c.head, x->a);
    check_arg(c.head, x->b);
    std::vector<Term> args(c.head.args().begin(), c.head.args().end());
    std::swap(args[x->a - 1], args[x->b - 1]);
    c.head = Atom(c.head.predicate(), std::move(args));
  } else if (const auto* x = std::get_if<UnshiftHead>(&m)) {
    Clause& c = clause_at(x->clause);
    check_arg(c.head, x->arg);
    const Term t = c.head.arg(x->arg - 1);
    if (!is_cons(t)) {
      throw ConfigError("mutation " + to_string(m) + ": head argument " + std::to_string(x->arg) + " is not a cons");
    }
    c.head = detail::with_arg(c.head, x->arg - 1, t.arg(1));
  } else if (const auto* x = std::get_if<ShiftBody>(&m)) {
    Clause& c = clause_at(x->clause);
    if (x->atom == 0 || x->atom > c.body.size()) {
      throw ConfigError("mutation " + to_string(m) + ": clause " + std::to_string(x->clause) + " has no body atom " +
                        std::to_string(x->atom));
    }
    Atom& a = c.body[x->atom - 1];
    check_arg(a, x->arg);
    a = detail::with_arg(a, x->arg - 1, cons(Term::fresh_var(), a.arg(x->arg - 1)));
  } else if (const auto* x = std::get_if<SelfLoop>(&m)) {
    std::vector<Term> args;
    for (std::size_t i = 1; i <= x->arity; ++i) args.push_back(Term::fresh_var("X" + std::to_string(i)));
    const Atom a(x->predicate, std::move(args));
    p.clauses.push_back(Clause{a, {a}});
  }
  return p;
}

}  // namespace dq
