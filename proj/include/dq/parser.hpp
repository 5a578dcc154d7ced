// Parser for the definite-clause subset:
//
//   program := clause*
//   clause  := atom [":-" atom {"," atom}] "."
//   atom    := name ["(" term {"," term} ")"]
//   term    := Variable | integer | name ["(" term {"," term} ")"]
//            | "[" "]" | "[" term {"," term} ["|" term] "]"
//
// Variables start with an uppercase letter or '_'; every bare '_' is a fresh
// variable. An integer literal k stands for s^k(0). '%' starts a line comment.

#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>

#include "dq/term.hpp"

namespace dq {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

enum class Tok { Name, Var, Int, LParen, RParen, LBrack, RBrack, Bar, Comma, Dot, Neck, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_layout();
    const std::size_t line = line_, col = col_;
    if (pos_ >= text_.size()) return {Tok::End, "", line, col};
    const char c = text_[pos_];
    auto single = [&](Tok k) {
      advance();
      return Token{k, std::string(1, c), line, col};
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '[': return single(Tok::LBrack);
      case ']': return single(Tok::RBrack);
      case '|': return single(Tok::Bar);
      case ',': return single(Tok::Comma);
      case '.': return single(Tok::Dot);
      case ':':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
          advance();
          advance();
          return {Tok::Neck, ":-", line, col};
        }
        throw ParseError("expected ':-'", line, col);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string s;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        s += text_[pos_];
        advance();
      }
      return {Tok::Int, s, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        s += text_[pos_];
        advance();
      }
      const bool is_var = c == '_' || std::isupper(static_cast<unsigned char>(c));
      return {is_var ? Tok::Var : Tok::Name, s, line, col};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_layout() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  Program program() {
    Program p;
    while (tok_.kind != Tok::End) p.clauses.push_back(clause());
    return p;
  }

  Clause clause() {
    vars_.clear();
    Clause c{atom(), {}};
    if (tok_.kind == Tok::Neck) {
      shift();
      c.body.push_back(atom());
      while (tok_.kind == Tok::Comma) {
        shift();
        c.body.push_back(atom());
      }
    }
    expect(Tok::Dot, "'.' at end of clause");
    return c;
  }

  // A single term or a comma-separated atom list, terminated by end of input
  // or an optional final '.'.
  Term lone_term() {
    Term t = term();
    finish();
    return t;
  }

  std::vector<Atom> query() {
    std::vector<Atom> goals{atom()};
    while (tok_.kind == Tok::Comma) {
      shift();
      goals.push_back(atom());
    }
    finish();
    return goals;
  }

 private:
  void finish() {
    if (tok_.kind == Tok::Dot) shift();
    if (tok_.kind != Tok::End) fail("end of input");
  }

  void shift() { tok_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& expected) const {
    const std::string found = tok_.kind == Tok::End ? "end of input" : "'" + tok_.text + "'";
    throw ParseError("expected " + expected + ", found " + found, tok_.line, tok_.column);
  }

  void expect(Tok kind, const std::string& what) {
    if (tok_.kind != kind) fail(what);
    shift();
  }

  Atom atom() {
    if (tok_.kind != Tok::Name) fail("a predicate name");
    const Token name = tok_;
    shift();
    std::vector<Term> args = maybe_args();
    auto [it, inserted] = arities_.try_emplace(name.text, args.size());
    if (!inserted && it->second != args.size()) {
      throw ParseError("predicate " + name.text + " used with arity " + std::to_string(args.size()) +
                           " but earlier with arity " + std::to_string(it->second),
                       name.line, name.column);
    }
    return Atom(Term::compound(name.text, std::move(args)));
  }

  std::vector<Term> maybe_args() {
    std::vector<Term> args;
    if (tok_.kind != Tok::LParen) return args;
    shift();
    args.push_back(term());
    while (tok_.kind == Tok::Comma) {
      shift();
      args.push_back(term());
    }
    expect(Tok::RParen, "')'");
    return args;
  }

  Term term() {
    switch (tok_.kind) {
      case Tok::Var: {
        std::string name = tok_.text;
        shift();
        if (name == "_") return Term::fresh_var();
        auto it = vars_.find(name);
        if (it != vars_.end()) return it->second;
        Term v = Term::fresh_var(name);
        vars_.emplace(std::move(name), v);
        return v;
      }
      case Tok::Int: {
        const Token t = tok_;
        shift();
        if (t.text.size() > 6) throw ParseError("integer literal too large", t.line, t.column);
        return numeral(std::stoul(t.text));
      }
      case Tok::Name: {
        std::string name = tok_.text;
        shift();
        return Term::compound(std::move(name), maybe_args());
      }
      case Tok::LBrack: {
        shift();
        if (tok_.kind == Tok::RBrack) {
          shift();
          return nil();
        }
        std::vector<Term> elems{term()};
        while (tok_.kind == Tok::Comma) {
          shift();
          elems.push_back(term());
        }
        Term tail = nil();
        if (tok_.kind == Tok::Bar) {
          shift();
          tail = term();
        }
        expect(Tok::RBrack, "']'");
        return make_list(elems, std::move(tail));
      }
      default: fail("a term");
    }
  }

  Lexer lexer_;
  Token tok_{Tok::End, "", 1, 1};
  std::unordered_map<std::string, Term> vars_;
  std::map<std::string, std::size_t> arities_;
};

}  // namespace detail

inline Program parse_program(std::string_view text) { return detail::Parser(text).program(); }

// Variables named alike within one call denote the same variable.
inline Term parse_term(std::string_view text) { return detail::Parser(text).lone_term(); }

inline Atom parse_atom(std::string_view text) {
  Term t = parse_term(text);
  if (t.is_var()) throw ParseError("expected an atom, found a variable", 1, 1);
  return Atom(std::move(t));
}

inline std::vector<Atom> parse_query(std::string_view text) { return detail::Parser(text).query(); }

}  // namespace dq
