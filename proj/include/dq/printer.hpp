#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>

#include "dq/term.hpp"

namespace dq {

struct PrintOptions {
  // Print s^k(0) as the decimal k. Off by default: the raw successor form is
  // what the program actually manipulates.
  bool decimal_numerals = false;
};

// Prints terms in the accepted surface grammar. Variable display names are
// stable for the lifetime of one Printer: named variables keep their source
// name (suffixed if two distinct variables share it), anonymous ones become
// _G1, _G2, ... in order of first appearance.
class Printer {
 public:
  explicit Printer(PrintOptions options = {}) : options_(options) {}

  std::string term(const Term& t) {
    std::string out;
    write(t, out);
    return out;
  }

  std::string atom(const Atom& a) { return term(a.as_term()); }

  std::string clause(const Clause& c) {
    std::string out = atom(c.head);
    if (!c.body.empty()) {
      out += " :- ";
      for (std::size_t i = 0; i < c.body.size(); ++i) {
        if (i) out += ", ";
        out += atom(c.body[i]);
      }
    }
    out += ".";
    return out;
  }

  std::string program(const Program& p) {
    std::string out;
    for (const Clause& c : p.clauses) {
      out += clause(c);
      out += "\n";
    }
    return out;
  }

 private:
  const std::string& var_name(const Term& v) {
    auto it = names_.find(v.var_id());
    if (it != names_.end()) return it->second;
    std::string base = v.var_name().empty() ? "_G" + std::to_string(++anonymous_) : v.var_name();
    std::string name = base;
    for (int k = 1; taken_.count(name); ++k) name = base + "_" + std::to_string(k);
    taken_.insert(name);
    return names_.emplace(v.var_id(), std::move(name)).first->second;
  }

  void write(const Term& t, std::string& out) {
    if (t.is_var()) {
      out += var_name(t);
      return;
    }
    if (options_.decimal_numerals && is_succ(t)) {
      if (auto n = numeral_value(t)) {
        out += std::to_string(*n);
        return;
      }
    }
    if (is_cons(t)) {
      out += '[';
      const Term* cur = &t;
      bool first = true;
      while (is_cons(*cur)) {
        if (!first) out += ',';
        first = false;
        write(cur->arg(0), out);
        cur = &cur->arg(1);
      }
      if (!is_nil(*cur)) {
        out += '|';
        write(*cur, out);
      }
      out += ']';
      return;
    }
    out += t.functor();
    if (t.arity() > 0) {
      out += '(';
      for (std::size_t i = 0; i < t.arity(); ++i) {
        if (i) out += ',';
        write(t.arg(i), out);
      }
      out += ')';
    }
  }

  PrintOptions options_;
  std::unordered_map<VarId, std::string> names_;
  std::unordered_set<std::string> taken_;
  int anonymous_ = 0;
};

inline std::string to_string(const Term& t, PrintOptions options = {}) { return Printer(options).term(t); }
inline std::string to_string(const Atom& a, PrintOptions options = {}) { return Printer(options).atom(a); }
inline std::string to_string(const Clause& c, PrintOptions options = {}) { return Printer(options).clause(c); }
inline std::string to_string(const Program& p, PrintOptions options = {}) { return Printer(options).program(p); }

}  // namespace dq
