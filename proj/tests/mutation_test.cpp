#include <gtest/gtest.h>

#include "dq/instances.hpp"
#include "dq/mutation.hpp"
#include "dq/nqueens.hpp"
#include "test_util.hpp"

namespace dq {
namespace {

using testing::A;

Term clause_term(const Clause& c) {
  std::vector<Term> parts{c.head.as_term()};
  for (const Atom& b : c.body) parts.push_back(b.as_term());
  return Term::compound("clause", parts);
}

bool same_clause(const Clause& x, const std::string& text) {
  return testing::is_variant(clause_term(x), clause_term(parse_program(text).clauses.at(0)));
}

TEST(ParseMutation, RoundTrip) {
  for (const char* s : {"drop-clause:3", "swap-args:2:3,4", "unshift-head:2:4", "shift-body:2:1:3", "self-loop:pq/4"}) {
    EXPECT_EQ(to_string(parse_mutation(s)), s);
  }
  EXPECT_EQ(to_string(parse_mutation("shift-body:2:1")), "shift-body:2:1:1");
}

TEST(ParseMutation, Errors) {
  for (const char* s : {"", "drop-clause", "drop-clause:0", "drop-clause:x", "swap-args:2:3", "swap-args:2:3,4,5",
                        "unshift-head:2", "shift-body:2:1:2:2", "self-loop:pq", "self-loop:/4", "rename:1",
                        "drop-clause:-1", "drop-clause:99999999999"}) {
    EXPECT_THROW(parse_mutation(s), ConfigError) << s;
  }
}

TEST(Mutate, EachKind) {
  const Program p = nqueens_program();
  const Program dropped = mutate(p, parse_mutation("drop-clause:3"));
  ASSERT_EQ(dropped.size(), 3u);
  EXPECT_TRUE(same_clause(dropped.clauses[2], "pq(I,[_|Cs],[_|Us],[_|Ds]) :- pq(I,Cs,Us,Ds)."));

  const Program swapped = mutate(p, parse_mutation("swap-args:2:3,4"));
  EXPECT_TRUE(same_clause(swapped.clauses[1], "pqs(s(I),Cs,[_|Ds],Us) :- pqs(I,Cs,[_|Us],Ds), pq(s(I),Cs,Us,Ds)."));

  const Program unshifted = mutate(p, parse_mutation("unshift-head:2:4"));
  EXPECT_TRUE(same_clause(unshifted.clauses[1], "pqs(s(I),Cs,Us,Ds) :- pqs(I,Cs,[_|Us],Ds), pq(s(I),Cs,Us,Ds)."));

  const Program shifted = mutate(p, parse_mutation("shift-body:2:1:3"));
  EXPECT_TRUE(same_clause(shifted.clauses[1], "pqs(s(I),Cs,Us,[_|Ds]) :- pqs(I,Cs,[_,_|Us],Ds), pq(s(I),Cs,Us,Ds)."));

  const Program looped = mutate(p, parse_mutation("self-loop:pq/4"));
  ASSERT_EQ(looped.size(), 5u);
  EXPECT_TRUE(same_clause(looped.clauses[4], "pq(A,B,C,D) :- pq(A,B,C,D)."));
}

TEST(Mutate, LeavesOtherClausesAlone) {
  const Program p = nqueens_program();
  const Program m = mutate(p, parse_mutation("unshift-head:2:4"));
  for (std::size_t i : {0u, 2u, 3u}) EXPECT_EQ(m.clauses[i], p.clauses[i]);
}

TEST(Mutate, BadTargets) {
  const Program p = nqueens_program();
  for (const char* s : {"drop-clause:5", "swap-args:2:1,5", "unshift-head:2:1", "unshift-head:1:2",
                        "shift-body:1:1", "shift-body:2:3", "shift-body:2:1:5"}) {
    EXPECT_THROW(mutate(p, parse_mutation(s)), ConfigError) << s;
  }
}

}  // namespace
}  // namespace dq
