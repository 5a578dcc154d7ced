#include <gtest/gtest.h>

#include "dq/term.hpp"
#include "test_util.hpp"

namespace dq {
namespace {

using testing::T;

TEST(Numerals, ValueRoundTrip) {
  for (std::size_t n = 0; n < 100; ++n) {
    EXPECT_EQ(numeral_value(numeral(n)), n);
    EXPECT_TRUE(is_numeral(numeral(n)));
  }
  EXPECT_FALSE(is_numeral(T("s(a)")));
  EXPECT_FALSE(is_numeral(T("s(X)")));
  EXPECT_FALSE(is_numeral(T("[]")));
}

TEST(Numerals, SuccOfNumeralIsNumeral) {
  for (std::size_t n = 0; n < 20; ++n) EXPECT_EQ(succ(numeral(n)), numeral(n + 1));
}

TEST(Terms, GroundnessMeansNoVariables) {
  testing::TermGen gen(7, {Term::fresh_var("X"), Term::fresh_var("Y")});
  for (int i = 0; i < 2000; ++i) {
    const Term t = gen.term(4);
    std::vector<Term> vars;
    collect_vars(t, vars);
    EXPECT_EQ(t.is_ground(), vars.empty()) << to_string(t);
  }
}

TEST(Lists, ProperListShapes) {
  EXPECT_TRUE(is_proper_list(T("[]")));
  EXPECT_TRUE(is_proper_list(T("[1,2,a]")));
  EXPECT_FALSE(is_proper_list(T("[1|a]")));
  EXPECT_FALSE(is_proper_list(T("[1|X]")));
  EXPECT_EQ(spine_elements(T("[1,2|X]")).size(), 2u);
  EXPECT_TRUE(spine_tail(T("[1,2|X]")).is_var());
}

TEST(Lists, GeneralizedMemberIgnoresTail) {
  EXPECT_TRUE(is_member(numeral(2), T("[1,2|a]")));
  EXPECT_TRUE(is_member(numeral(1), T("[1|X]")));
  EXPECT_FALSE(is_member(numeral(3), T("[1,2|a]")));
  EXPECT_FALSE(is_member(numeral(1), T("a")));
  const auto ms = members(T("[a,1|b]"));
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_EQ(ms[0].first, 1u);
  EXPECT_EQ(ms[1].second, numeral(1));
}

TEST(Lists, DistinctList) {
  EXPECT_TRUE(is_distinct_list(T("[]")));
  EXPECT_TRUE(is_distinct_list(T("[3,1,4,2]")));
  EXPECT_FALSE(is_distinct_list(T("[1,2,1]")));
  EXPECT_FALSE(is_distinct_list(T("[1,2|a]")));
}

TEST(Substitution, BindKeepsIdempotence) {
  const Term x = Term::fresh_var("X"), y = Term::fresh_var("Y");
  Substitution s;
  s.bind(x, Term::compound("f", {y, y}));
  s.bind(y, numeral(1));
  EXPECT_EQ(apply(s, x), T("f(1,1)"));
  EXPECT_EQ(apply(s, apply(s, x)), apply(s, x));
}

TEST(Substitution, ComposeAppliesInOrder) {
  testing::TermGen gen(11, {});
  const Term x = Term::fresh_var("X"), y = Term::fresh_var("Y"), z = Term::fresh_var("Z");
  for (int i = 0; i < 500; ++i) {
    Substitution first, second;
    first.bind(x, Term::compound("f", {y, gen.term(2)}));
    second.bind(y, gen.term(2));
    second.bind(z, gen.term(2));
    const Term t = Term::compound("g", {x, y, z});
    EXPECT_EQ(apply(compose(first, second), t), apply(second, apply(first, t)));
  }
}

TEST(Substitution, FromBindingsRejectsNonIdempotent) {
  const Term x = Term::fresh_var("X"), y = Term::fresh_var("Y");
  EXPECT_THROW(Substitution::from_bindings({{x, Term::compound("f", {y})}, {y, numeral(1)}}), std::invalid_argument);
  EXPECT_THROW(Substitution::from_bindings({{x, numeral(1)}, {x, numeral(2)}}), std::invalid_argument);
}

TEST(Unify, Examples) {
  const Term x = Term::fresh_var("X");
  EXPECT_FALSE(unify(x, Term::compound("f", {x})).has_value()) << "occurs check";
  const auto s = unify(T("[1|T]"), T("[H,2]"));
  ASSERT_TRUE(s.has_value());
  EXPECT_FALSE(unify(T("f(1)"), T("f(2)")).has_value());
  EXPECT_FALSE(unify(T("f(1)"), T("g(1)")).has_value());
}

// Unification soundness: a returned substitution unifies both sides, is
// idempotent and only mentions their variables.
TEST(UnifyProperty, Soundness) {
  const std::vector<Term> vars{Term::fresh_var("X"), Term::fresh_var("Y"), Term::fresh_var("Z")};
  testing::TermGen gen(2024, vars);
  int unified = 0;
  for (int i = 0; i < 20000; ++i) {
    const Term x = gen.term(3), y = gen.term(3);
    const auto s = unify(x, y);
    if (!s) continue;
    ++unified;
    EXPECT_EQ(apply(*s, x), apply(*s, y)) << to_string(x) << " = " << to_string(y);
    for (const auto& b : s->bindings()) {
      EXPECT_EQ(apply(*s, b.value), b.value);
      EXPECT_TRUE(std::any_of(vars.begin(), vars.end(), [&](const Term& v) { return v == b.variable; }));
    }
  }
  EXPECT_GT(unified, 1000);
}

// Completeness against brute force: when two terms have a common ground
// instance over a small pool, unify succeeds and that instance is an instance
// of the unified term.
TEST(UnifyProperty, CompleteAgainstGroundOracle) {
  const std::vector<Term> vars{Term::fresh_var("X"), Term::fresh_var("Y")};
  testing::TermGen gen(99, vars);
  const std::vector<Term> pool{zero(), numeral(1), nil(), filler(), T("[0]"), T("f(0,a)")};
  for (int i = 0; i < 3000; ++i) {
    const Term x = gen.term(2), y = gen.term(2);
    const auto s = unify(x, y);
    bool common = false;
    testing::for_each_assignment(vars.size(), pool, [&](const std::vector<Term>& values) {
      const Term gx = testing::ground_with(x, vars, values), gy = testing::ground_with(y, vars, values);
      if (!(gx == gy)) return;
      common = true;
      ASSERT_TRUE(s.has_value()) << to_string(x) << " = " << to_string(y);
      EXPECT_TRUE(is_instance_of(gx, apply(*s, x)));
    });
    if (!s) { EXPECT_FALSE(common); }
  }
}

TEST(UnifyProperty, Symmetric) {
  testing::TermGen gen(5, {Term::fresh_var("X"), Term::fresh_var("Y")});
  for (int i = 0; i < 5000; ++i) {
    const Term x = gen.term(3), y = gen.term(3);
    const auto s = unify(x, y), r = unify(y, x);
    ASSERT_EQ(s.has_value(), r.has_value());
    if (s) { EXPECT_TRUE(testing::is_variant(apply(*s, x), apply(*r, x))); }
  }
}

TEST(Match, OneWay) {
  const Term pattern = T("f(X,[X|T])");
  const auto m = match(pattern, T("f(1,[1,2])"));
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(apply(*m, pattern.arg(0)), numeral(1));
  EXPECT_EQ(apply(*m, pattern.arg(1).arg(1)), T("[2]"));
  EXPECT_FALSE(match(T("f(X,X)"), T("f(1,2)")).has_value());
  EXPECT_FALSE(match(T("f(1)"), T("f(Y)")).has_value());
  EXPECT_TRUE(is_instance_of(T("f(1,a)"), T("f(X,Y)")));
  EXPECT_FALSE(is_instance_of(T("f(X,Y)"), T("f(1,a)")));
}

TEST(MatchProperty, AgreesWithApply) {
  const std::vector<Term> vars{Term::fresh_var("X"), Term::fresh_var("Y")};
  testing::TermGen gen(31, vars);
  testing::TermGen ground(32, {});
  for (int i = 0; i < 5000; ++i) {
    const Term pattern = gen.term(3);
    const std::vector<Term> values{ground.term(2), ground.term(2)};
    const Term target = testing::ground_with(pattern, vars, values);
    const auto m = match(pattern, target);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(apply(*m, pattern), target);
  }
}

TEST(RenameApart, FreshVariablesSameShape) {
  const Term t = T("f(X,[Y|X],Z)");
  const Term r = rename_apart(t);
  EXPECT_TRUE(testing::is_variant(t, r));
  std::vector<Term> a;
  collect_vars(t, a);
  for (const Term& v : a) EXPECT_FALSE(occurs(v.var_id(), r));
}

TEST(Atoms, RejectVariableAtoms) {
  EXPECT_THROW(Atom(Term::fresh_var("X")), std::invalid_argument);
  const Atom a("p", {numeral(1)});
  EXPECT_EQ(a.predicate(), "p");
  EXPECT_EQ(a.arity(), 1u);
}

}  // namespace
}  // namespace dq
