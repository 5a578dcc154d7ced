#include <gtest/gtest.h>

#include <set>

#include "dq/search.hpp"
#include "dq/universe.hpp"
#include "test_util.hpp"

namespace dq {
namespace {

using testing::A;
using testing::T;

// Closed form: |tails| * (1 + e + ... + e^L) boards with e element values.
Count boards_closed_form(std::size_t n, std::size_t l) {
  Count e = n + 1, total = 0, layer = 2;  // elements 1..n and a; tails [] and a
  for (std::size_t k = 0; k <= l; ++k) {
    total += layer;
    layer *= e;
  }
  return total;
}

TEST(Enumeration, CountsMatchClosedForm) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (std::size_t l = 0; l <= 3; ++l) {
      const UniverseBounds b = UniverseBounds::of(n, l);
      EXPECT_EQ(enumerate_terms(b, Sort::Numeral).size(), n + 1);
      EXPECT_EQ(enumerate_terms(b, Sort::BoardTerm).size(), boards_closed_form(n, l));
      EXPECT_EQ(sort_count(b, Sort::BoardTerm), boards_closed_form(n, l));
      EXPECT_EQ(sort_count(b, Sort::AnyPoolTerm), n + 1 + boards_closed_form(n, l));
    }
  }
}

TEST(Enumeration, NoDuplicatesAndAllInhabit) {
  const UniverseBounds b = UniverseBounds::of(2, 2);
  for (Sort s : {Sort::Numeral, Sort::BoardTerm, Sort::AnyPoolTerm}) {
    const std::vector<Term> ts = enumerate_terms(b, s);
    const std::set<Term> unique(ts.begin(), ts.end());
    EXPECT_EQ(unique.size(), ts.size());
    for (const Term& t : ts) {
      EXPECT_TRUE(t.is_ground());
      EXPECT_TRUE(can_inhabit(t, s, b)) << to_string(t);
    }
  }
}

TEST(Enumeration, SmallExample) {
  const UniverseBounds b = UniverseBounds::of(1, 1);
  const std::vector<Term> ts = enumerate_terms(b, Sort::BoardTerm);
  const std::set<Term> got(ts.begin(), ts.end());
  const std::set<Term> want{T("[]"), T("a"), T("[1]"), T("[a]"), T("[1|a]"), T("[a|a]")};
  EXPECT_EQ(got, want);
}

// can_inhabit on a partial term agrees with the existence of a ground instance
// among the enumerated terms (terms with one variable occurrence each).
TEST(Inhabit, AgreesWithEnumeration) {
  const UniverseBounds b = UniverseBounds::of(2, 2);
  const std::vector<Term> patterns{T("[X|Y]"),  T("[1,X]"), T("[X,Y,Z]"), T("[X,Y,Z|W]"), T("s(X)"), T("s(s(s(X)))"),
                                   T("[0|X]"),   T("f(X)"),  T("[f(X)]"),   T("[a|b]"),     T("X"),    T("[s(X)]")};
  for (Sort s : {Sort::Numeral, Sort::BoardTerm, Sort::AnyPoolTerm}) {
    const std::vector<Term> ts = enumerate_terms(b, s);
    for (const Term& p : patterns) {
      const bool exists = std::any_of(ts.begin(), ts.end(), [&](const Term& t) { return is_instance_of(t, p); });
      EXPECT_EQ(can_inhabit(p, s, b), exists) << to_string(p) << " as " << to_string(s);
    }
  }
}

TEST(Inhabit, BoundedBase) {
  const UniverseBounds b = UniverseBounds::of(1, 1);
  EXPECT_TRUE(in_bounded_base(A("pq(1,[1],[1],[1])"), b));
  EXPECT_FALSE(in_bounded_base(A("pqs(1,[1],[1],[a,1])"), b));
  EXPECT_FALSE(in_bounded_base(A("pq(2,[1],[1],[1])"), b));
  EXPECT_FALSE(in_bounded_base(A("pq(1,[0],[1],[1])"), b)) << "0 is not an element value";
}

TEST(Domains, RefinementLeavesAreTheSort) {
  for (std::size_t n = 0; n <= 2; ++n) {
    for (std::size_t l = 0; l <= 2; ++l) {
      const UniverseBounds b = UniverseBounds::of(n, l);
      for (Sort s : {Sort::Numeral, Sort::BoardTerm, Sort::AnyPoolTerm}) {
        const Term v = Term::fresh_var();
        SearchNode root{{v}, {{v, Domain::of(s, b)}}};
        std::multiset<Term> leaves;
        for_each_completion(root, b, kCountMax, [&](const std::vector<Term>& ts) {
          leaves.insert(ts[0]);
          return true;
        });
        const std::vector<Term> ts = enumerate_terms(b, s);
        EXPECT_EQ(leaves, std::multiset<Term>(ts.begin(), ts.end()));
        EXPECT_EQ(domain_count(Domain::of(s, b), b), ts.size());
      }
    }
  }
}

TEST(Domains, SizeRangeCoversMembers) {
  const UniverseBounds b = UniverseBounds::of(3, 2);
  for (Sort s : {Sort::Numeral, Sort::BoardTerm, Sort::AnyPoolTerm}) {
    const auto [lo, hi] = domain_size_range(Domain::of(s, b), b);
    for (const Term& t : enumerate_terms(b, s)) {
      std::size_t size = 0;
      for (const Term* cur = &t; is_cons(*cur) || is_succ(*cur); cur = &cur->arg(is_cons(*cur) ? 1 : 0)) ++size;
      EXPECT_LE(lo, size);
      EXPECT_GE(hi, size);
    }
  }
}

TEST(Counts, Saturate) {
  EXPECT_EQ(sat_add(kCountMax, 1), kCountMax);
  EXPECT_EQ(sat_mul(kCountMax / 2, 3), kCountMax);
  EXPECT_EQ(sat_mul(0, kCountMax), 0u);
}

}  // namespace
}  // namespace dq
