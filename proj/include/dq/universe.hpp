// Bounded slices of the Herbrand universe.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "dq/term.hpp"

namespace dq {

struct UniverseBounds {
  std::size_t max_numeral = 4;   // N
  std::size_t max_list_len = 4;  // L
  std::vector<Term> element_pool_extra{filler()};
  std::vector<Term> tail_pool{nil(), filler()};

  static UniverseBounds of(std::size_t n, std::size_t l) {
    UniverseBounds b;
    b.max_numeral = n;
    b.max_list_len = l;
    return b;
  }

  // Same pools, list bound replaced.
  UniverseBounds with_list_len(std::size_t l) const {
    UniverseBounds b = *this;
    b.max_list_len = l;
    return b;
  }

  // Element values of board terms: numerals 1..N followed by the extra pool.
  std::vector<Term> elements() const {
    std::vector<Term> out;
    for (std::size_t i = 1; i <= max_numeral; ++i) out.push_back(numeral(i));
    for (const Term& e : element_pool_extra) {
      if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
    return out;
  }
};

// Componentwise order on the numeric bounds; pools must agree.
inline bool bounds_leq(const UniverseBounds& x, const UniverseBounds& y) {
  return x.max_numeral <= y.max_numeral && x.max_list_len <= y.max_list_len &&
         x.element_pool_extra == y.element_pool_extra && x.tail_pool == y.tail_pool;
}

enum class Sort { Numeral, BoardTerm, AnyPoolTerm };

inline std::string to_string(Sort s) {
  switch (s) {
    case Sort::Numeral: return "numeral";
    case Sort::BoardTerm: return "board";
    case Sort::AnyPoolTerm: return "any";
  }
  return "?";
}

inline Sort parse_sort(const std::string& s) {
  if (s == "numeral") return Sort::Numeral;
  if (s == "board") return Sort::BoardTerm;
  if (s == "any") return Sort::AnyPoolTerm;
  throw std::invalid_argument("unknown sort '" + s + "' (expected numeral, board or any)");
}

// Saturating arithmetic for instance counts.
using Count = std::uint64_t;
inline constexpr Count kCountMax = std::numeric_limits<Count>::max();
inline Count sat_add(Count x, Count y) { return x > kCountMax - y ? kCountMax : x + y; }
inline Count sat_mul(Count x, Count y) {
  if (x == 0 || y == 0) return 0;
  return x > kCountMax / y ? kCountMax : x * y;
}

// Deterministic, duplicate-free enumeration of one sort.
//
// Numeral:     0, s(0), ..., s^N(0).
// BoardTerm:   [e1, ..., ek | t] for 0 <= k <= L, ordered by k, then by the
//              tail t (pool order), then by the elements lexicographically
//              (element order as in UniverseBounds::elements). k = 0 yields
//              the bare tails.
// AnyPoolTerm: the Numeral terms followed by the BoardTerm terms.
inline std::vector<Term> enumerate_terms(const UniverseBounds& b, Sort sort) {
  std::vector<Term> out;
  std::unordered_set<Term, TermHash> seen;
  if (sort == Sort::Numeral || sort == Sort::AnyPoolTerm) {
    for (std::size_t i = 0; i <= b.max_numeral; ++i) {
      out.push_back(numeral(i));
      seen.insert(out.back());
    }
  }
  if (sort == Sort::BoardTerm || sort == Sort::AnyPoolTerm) {
    const std::vector<Term> elems = b.elements();
    for (std::size_t k = 0; k <= b.max_list_len; ++k) {
      for (const Term& tail : b.tail_pool) {
        std::vector<std::size_t> idx(k, 0);
        if (k > 0 && elems.empty()) continue;
        while (true) {
          std::vector<Term> row;
          row.reserve(k);
          for (std::size_t i : idx) row.push_back(elems[i]);
          Term t = make_list(row, tail);
          if (seen.insert(t).second) out.push_back(std::move(t));
          std::size_t pos = k;
          while (pos > 0 && ++idx[pos - 1] == elems.size()) idx[--pos] = 0;
          if (pos == 0) break;
        }
      }
    }
  }
  return out;
}

inline Count board_count(const UniverseBounds& b, std::size_t len) {
  const Count elems = b.elements().size();
  Count total = 0, layer = b.tail_pool.size();
  for (std::size_t k = 0; k <= len; ++k) {
    total = sat_add(total, layer);
    layer = sat_mul(layer, elems);
  }
  return total;
}

inline Count sort_count(const UniverseBounds& b, Sort sort) {
  switch (sort) {
    case Sort::Numeral: return b.max_numeral + 1;
    case Sort::BoardTerm: return board_count(b, b.max_list_len);
    case Sort::AnyPoolTerm: return sat_add(b.max_numeral + 1, board_count(b, b.max_list_len));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Refinement domains.
//
// A pending variable of a search carries a Domain. Refining it replaces the
// variable by each of its children: ground values, or a cons cell [E|T]
// whose element E and tail T are fresh variables. The leaves of the refinement
// tree are exactly the terms of the sort, each once, so subtree sizes are
// exact instance counts.

struct Domain {
  enum class Kind { Numeral, Board, Any, Finite } kind = Kind::Any;
  std::size_t len = 0;        // remaining spine length for Board/Any
  std::vector<Term> values;   // Finite only

  static Domain of(Sort s, const UniverseBounds& b) {
    switch (s) {
      case Sort::Numeral: return {Kind::Numeral, 0, {}};
      case Sort::BoardTerm: return {Kind::Board, b.max_list_len, {}};
      case Sort::AnyPoolTerm: return {Kind::Any, b.max_list_len, {}};
    }
    return {};
  }
  static Domain finite(std::vector<Term> values) { return {Kind::Finite, 0, std::move(values)}; }
};

inline Count domain_count(const Domain& d, const UniverseBounds& b) {
  switch (d.kind) {
    case Domain::Kind::Numeral: return b.max_numeral + 1;
    case Domain::Kind::Board: return board_count(b, d.len);
    case Domain::Kind::Any: return sat_add(b.max_numeral + 1, board_count(b, d.len));
    case Domain::Kind::Finite: return d.values.size();
  }
  return 0;
}

// Bounds on the size measure |t| (cons cells and s-applications along the
// spine) over the members of a domain.
inline std::pair<std::size_t, std::size_t> domain_size_range(const Domain& d, const UniverseBounds& b) {
  switch (d.kind) {
    case Domain::Kind::Numeral: return {0, b.max_numeral};
    case Domain::Kind::Board: return {0, d.len};
    case Domain::Kind::Any: return {0, std::max(b.max_numeral, d.len)};
    case Domain::Kind::Finite: break;
  }
  std::size_t lo = std::numeric_limits<std::size_t>::max(), hi = 0;
  for (const Term& t : d.values) {
    std::size_t n = 0;
    for (const Term* cur = &t; is_cons(*cur) || is_succ(*cur); cur = &cur->arg(is_cons(*cur) ? 1 : 0)) ++n;
    lo = std::min(lo, n);
    hi = std::max(hi, n);
  }
  if (d.values.empty()) lo = 0;
  return {lo, hi};
}

struct Refinement {
  Term value;
  // Fresh variables of value still to refine: for a cons, its element then
  // its tail.
  std::vector<std::pair<Term, Domain>> introduced;
};

inline std::vector<Refinement> refine(const Domain& d, const UniverseBounds& b) {
  std::vector<Refinement> out;
  auto numerals = [&] {
    for (std::size_t i = 0; i <= b.max_numeral; ++i) out.push_back({numeral(i), {}});
  };
  auto board = [&](std::size_t len) {
    for (const Term& t : b.tail_pool) out.push_back({t, {}});
    if (len == 0) return;
    Term element = Term::fresh_var(), rest = Term::fresh_var();
    out.push_back({cons(element, rest),
                   {{element, Domain::finite(b.elements())}, {rest, Domain{Domain::Kind::Board, len - 1, {}}}}});
  };
  switch (d.kind) {
    case Domain::Kind::Numeral: numerals(); break;
    case Domain::Kind::Board: board(d.len); break;
    case Domain::Kind::Any:
      numerals();
      board(d.len);
      break;
    case Domain::Kind::Finite:
      for (const Term& v : d.values) out.push_back({v, {}});
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Argument sorts of the bounded Herbrand base. pq/4 and pqs/4 take a numeral
// followed by three board terms; other predicates range over AnyPoolTerm.

inline std::vector<Sort> argument_sorts(const std::string& predicate, std::size_t arity) {
  if ((predicate == "pq" || predicate == "pqs") && arity == 4) {
    return {Sort::Numeral, Sort::BoardTerm, Sort::BoardTerm, Sort::BoardTerm};
  }
  return std::vector<Sort>(arity, Sort::AnyPoolTerm);
}

namespace detail {

inline bool can_be_numeral(const Term& t, std::size_t max) {
  std::size_t n = 0;
  const Term* cur = &t;
  while (is_succ(*cur)) {
    ++n;
    cur = &cur->arg(0);
  }
  if (n > max) return false;
  return cur->is_var() || is_zero(*cur);
}

inline bool can_be_one_of(const Term& t, const std::vector<Term>& pool) {
  return std::any_of(pool.begin(), pool.end(), [&](const Term& p) {
    return t.is_ground() ? t == p : is_instance_of(p, t);
  });
}

inline bool can_be_element(const Term& t, const UniverseBounds& b) {
  if (t.is_var()) return true;
  if (can_be_one_of(t, b.element_pool_extra)) return true;
  if (!can_be_numeral(t, b.max_numeral)) return false;
  return !is_zero(t);
}

inline bool can_be_board(const Term& t, const UniverseBounds& b, std::size_t len) {
  const Term* cur = &t;
  std::size_t k = 0;
  while (is_cons(*cur)) {
    if (++k > len) return false;
    if (!can_be_element(cur->arg(0), b)) return false;
    cur = &cur->arg(1);
  }
  return cur->is_var() || can_be_one_of(*cur, b.tail_pool);
}

}  // namespace detail

// Does t have an instance of the given sort? Each position is judged on its
// own; constraints between repeated variables are not tracked.
inline bool can_inhabit(const Term& t, Sort sort, const UniverseBounds& b) {
  switch (sort) {
    case Sort::Numeral: return detail::can_be_numeral(t, b.max_numeral);
    case Sort::BoardTerm: return detail::can_be_board(t, b, b.max_list_len);
    case Sort::AnyPoolTerm:
      return detail::can_be_numeral(t, b.max_numeral) || detail::can_be_board(t, b, b.max_list_len);
  }
  return false;
}

// Is a ground atom inside the bounded base?
inline bool in_bounded_base(const Atom& a, const UniverseBounds& b) {
  const std::vector<Sort> sorts = argument_sorts(a.predicate(), a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!can_inhabit(a.arg(i), sorts[i], b)) return false;
  }
  return true;
}

}  // namespace dq
