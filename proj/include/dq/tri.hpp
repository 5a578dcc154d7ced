// Three-valued evaluation over partially instantiated terms.
//
// A partial term stands for the set of its ground completions. A predicate
// evaluated on a partial term answers True (holds for every completion),
// False (holds for none) or Unknown. The evaluators below are sound but not
// complete: they may answer Unknown where a finer analysis would decide. On
// ground input they always decide.

#pragma once

#include <cstdint>
#include <optional>

#include "dq/term.hpp"

namespace dq {

enum class Tri : std::uint8_t { False, True, Unknown };

constexpr Tri tri(bool b) { return b ? Tri::True : Tri::False; }

constexpr Tri operator&&(Tri x, Tri y) {
  if (x == Tri::False || y == Tri::False) return Tri::False;
  if (x == Tri::True && y == Tri::True) return Tri::True;
  return Tri::Unknown;
}

constexpr Tri operator||(Tri x, Tri y) {
  if (x == Tri::True || y == Tri::True) return Tri::True;
  if (x == Tri::False && y == Tri::False) return Tri::False;
  return Tri::Unknown;
}

constexpr Tri operator!(Tri x) {
  if (x == Tri::Unknown) return Tri::Unknown;
  return x == Tri::True ? Tri::False : Tri::True;
}

constexpr bool decided(Tri x) { return x != Tri::Unknown; }

// Could x and y become equal for some completion? Variables are treated as
// independent wildcards, so a `false` answer is definitive.
inline bool may_equal(const Term& x, const Term& y) {
  if (x.is_var() || y.is_var()) return true;
  if (x.is_ground() && y.is_ground()) return x == y;
  if (x.arity() != y.arity() || x.functor() != y.functor()) return false;
  for (std::size_t i = 0; i < x.arity(); ++i) {
    if (!may_equal(x.arg(i), y.arg(i))) return false;
  }
  return true;
}

inline Tri equal3(const Term& x, const Term& y) {
  if (x.is_ground() && y.is_ground()) return tri(x == y);
  if (x == y) return Tri::True;
  return may_equal(x, y) ? Tri::Unknown : Tri::False;
}

// Is t the numeral s^n(0)?
inline Tri equals_numeral3(const Term& t, std::size_t n) {
  const Term* cur = &t;
  for (std::size_t i = 0; i < n; ++i) {
    if (cur->is_var()) return Tri::Unknown;
    if (!is_succ(*cur)) return Tri::False;
    cur = &cur->arg(0);
  }
  if (cur->is_var()) return Tri::Unknown;
  return tri(is_zero(*cur));
}

struct NumeralShape {
  enum class Kind { Numeral, NotNumeral, Unknown } kind;
  std::size_t value = 0;  // exact value for Numeral; number of s() seen for Unknown
};

inline NumeralShape numeral_shape(const Term& t) {
  std::size_t n = 0;
  const Term* cur = &t;
  while (is_succ(*cur)) {
    ++n;
    cur = &cur->arg(0);
  }
  if (cur->is_var()) return {NumeralShape::Kind::Unknown, n};
  if (is_zero(*cur)) return {NumeralShape::Kind::Numeral, n};
  return {NumeralShape::Kind::NotNumeral, n};
}

// The l-th member (1-based) of a possibly partial term.
struct MemberLookup {
  enum class Kind { Absent, Present, Unknown } kind;
  const Term* member = nullptr;
};

inline MemberLookup nth_member3(const Term& t, std::size_t l) {
  const Term* cur = &t;
  for (std::size_t pos = 1;; ++pos) {
    if (cur->is_var()) return {MemberLookup::Kind::Unknown};
    if (!is_cons(*cur)) return {MemberLookup::Kind::Absent};
    if (pos == l) return {MemberLookup::Kind::Present, &cur->arg(0)};
    cur = &cur->arg(1);
  }
}

// Is the l-th member of t the numeral j?
inline Tri nth_member_is_numeral3(const Term& t, std::size_t l, std::size_t j) {
  const MemberLookup m = nth_member3(t, l);
  switch (m.kind) {
    case MemberLookup::Kind::Absent: return Tri::False;
    case MemberLookup::Kind::Unknown: return Tri::Unknown;
    case MemberLookup::Kind::Present: return equals_numeral3(*m.member, j);
  }
  return Tri::Unknown;
}

// Is e a member of t (generalized member relation)?
inline Tri member3(const Term& e, const Term& t) {
  Tri r = Tri::False;
  const Term* cur = &t;
  while (is_cons(*cur)) {
    r = r || equal3(cur->arg(0), e);
    if (r == Tri::True) return r;
    cur = &cur->arg(1);
  }
  if (cur->is_var()) r = r || Tri::Unknown;
  return r;
}

inline Tri numeral_member3(std::size_t j, const Term& t) {
  Tri r = Tri::False;
  const Term* cur = &t;
  while (is_cons(*cur)) {
    r = r || equals_numeral3(cur->arg(0), j);
    if (r == Tri::True) return r;
    cur = &cur->arg(1);
  }
  if (cur->is_var()) r = r || Tri::Unknown;
  return r;
}

inline Tri proper_list3(const Term& t) {
  const Term* cur = &t;
  while (is_cons(*cur)) cur = &cur->arg(1);
  if (cur->is_var()) return Tri::Unknown;
  return tri(is_nil(*cur));
}

// Is t a proper list with pairwise distinct members?
inline Tri distinct_list3(const Term& t) {
  const Tri proper = proper_list3(t);
  if (proper == Tri::False) return Tri::False;
  std::vector<const Term*> elems;
  for (const Term* cur = &t; is_cons(*cur); cur = &cur->arg(1)) elems.push_back(&cur->arg(0));
  Tri all_distinct = Tri::True;
  for (std::size_t x = 0; x < elems.size(); ++x) {
    for (std::size_t y = x + 1; y < elems.size(); ++y) {
      all_distinct = all_distinct && !equal3(*elems[x], *elems[y]);
      if (all_distinct == Tri::False) return Tri::False;
    }
  }
  // An open tail may still grow into a duplicate.
  return proper && all_distinct;
}

}  // namespace dq
