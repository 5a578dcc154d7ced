#include <gtest/gtest.h>

#include "dq/tri.hpp"
#include "test_util.hpp"

namespace dq {
namespace {

using testing::T;

TEST(Tri, Connectives) {
  EXPECT_EQ(Tri::True && Tri::Unknown, Tri::Unknown);
  EXPECT_EQ(Tri::False && Tri::Unknown, Tri::False);
  EXPECT_EQ(Tri::True || Tri::Unknown, Tri::True);
  EXPECT_EQ(Tri::False || Tri::Unknown, Tri::Unknown);
  EXPECT_EQ(!Tri::Unknown, Tri::Unknown);
  EXPECT_EQ(!Tri::True, Tri::False);
}

TEST(Tri, Examples) {
  EXPECT_EQ(equal3(T("[1|X]"), T("[2|Y]")), Tri::False);
  EXPECT_EQ(equal3(T("[1|X]"), T("[1,2]")), Tri::Unknown);
  EXPECT_EQ(member3(numeral(1), T("[2,1|X]")), Tri::True);
  EXPECT_EQ(member3(numeral(3), T("[2,1|X]")), Tri::Unknown);
  EXPECT_EQ(member3(numeral(3), T("[2,1|a]")), Tri::False);
  EXPECT_EQ(distinct_list3(T("[1,1|X]")), Tri::False);
  EXPECT_EQ(distinct_list3(T("[1,2|X]")), Tri::Unknown);
  EXPECT_EQ(proper_list3(T("[1|a]")), Tri::False);
  EXPECT_EQ(nth_member_is_numeral3(T("[a,2|X]"), 2, 2), Tri::True);
  EXPECT_EQ(nth_member_is_numeral3(T("[a|X]"), 2, 2), Tri::Unknown);
  EXPECT_EQ(equals_numeral3(T("s(X)"), 0), Tri::False);
}

// Every decided three-valued answer agrees with the two-valued predicate on
// every completion over a small pool.
class TriSoundness : public ::testing::Test {
 protected:
  std::vector<Term> vars{Term::fresh_var("X"), Term::fresh_var("Y")};
  std::vector<Term> pool{zero(), numeral(1), numeral(2), nil(), filler(), T("[1]"), T("[2,1]"), T("[1|a]")};

  template <class F3, class F>
  void check(const Term& t, F3 f3, F f) {
    const Tri v = f3(t);
    int agree_true = 0, agree_false = 0;
    testing::for_each_assignment(vars.size(), pool, [&](const std::vector<Term>& values) {
      const bool g = f(testing::ground_with(t, vars, values));
      (g ? agree_true : agree_false)++;
    });
    if (v == Tri::True) { EXPECT_EQ(agree_false, 0) << to_string(t); }
    if (v == Tri::False) { EXPECT_EQ(agree_true, 0) << to_string(t); }
    if (t.is_ground()) { EXPECT_NE(v, Tri::Unknown) << to_string(t); }
  }
};

TEST_F(TriSoundness, RandomPartialTerms) {
  testing::TermGen gen(123, vars);
  auto nth_is = [](const Term& t, std::size_t l, std::size_t j) {
    const Term* cur = &t;
    for (std::size_t pos = 1; is_cons(*cur); ++pos, cur = &cur->arg(1)) {
      if (pos == l) return cur->arg(0) == numeral(j);
    }
    return false;
  };
  for (int i = 0; i < 1500; ++i) {
    const Term t = gen.term(4), u = gen.term(3);
    check(t, [&](const Term& x) { return equal3(x, u.is_ground() ? u : numeral(1)); },
          [&](const Term& x) { return x == (u.is_ground() ? u : numeral(1)); });
    check(t, [](const Term& x) { return member3(numeral(1), x); }, [](const Term& x) { return is_member(numeral(1), x); });
    check(t, [](const Term& x) { return numeral_member3(2, x); }, [](const Term& x) { return is_member(numeral(2), x); });
    check(t, proper_list3, is_proper_list);
    check(t, distinct_list3, is_distinct_list);
    check(t, [](const Term& x) { return equals_numeral3(x, 1); }, [](const Term& x) { return x == numeral(1); });
    check(t, [&](const Term& x) { return nth_member_is_numeral3(x, 2, 1); }, [&](const Term& x) { return nth_is(x, 2, 1); });
  }
}

TEST_F(TriSoundness, SharedVariables) {
  // Both sides mention X; equal3 must not claim False for f(X,X) vs f(1,Y).
  const Term x = Term::compound("f", {vars[0], vars[0]});
  const Term y = Term::compound("f", {numeral(1), vars[1]});
  check(Term::compound("p", {x, y}), [](const Term& p) { return equal3(p.arg(0), p.arg(1)); },
        [](const Term& p) { return p.arg(0) == p.arg(1); });
}

}  // namespace
}  // namespace dq
