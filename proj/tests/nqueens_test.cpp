#include <gtest/gtest.h>

#include <functional>

#include "dq/nqueens.hpp"
#include "test_util.hpp"

namespace dq {
namespace {

using testing::A;

// Backtracking over columns with row and diagonal occupancy, separate from
// the permutation oracle in the library.
std::set<Placement> backtrack_solutions(std::size_t n) {
  std::set<Placement> out;
  std::vector<std::size_t> rows;
  std::vector<bool> row_used(n + 1), up(2 * n + 1), down(2 * n + 1);
  std::function<void()> go = [&] {
    const std::size_t col = rows.size() + 1;
    if (col > n) {
      out.insert(Placement{n, rows});
      return;
    }
    for (std::size_t r = 1; r <= n; ++r) {
      if (row_used[r] || up[r + col] || down[r + n - col]) continue;
      row_used[r] = up[r + col] = down[r + n - col] = true;
      rows.push_back(r);
      go();
      rows.pop_back();
      row_used[r] = up[r + col] = down[r + n - col] = false;
    }
  };
  go();
  return out;
}

TEST(Queens, FourHasTwoSolutions) {
  const QueensResult r = solve_queens(4);
  EXPECT_TRUE(r.complete());
  EXPECT_EQ(r.placements, (std::set<Placement>{{4, {2, 4, 1, 3}}, {4, {3, 1, 4, 2}}}));
  EXPECT_EQ(r.answers.size(), 2u);
}

TEST(Queens, KnownCounts) {
  const std::vector<std::size_t> counts{1, 1, 0, 0, 2, 10, 4, 40, 92};
  for (std::size_t n = 0; n < counts.size(); ++n) EXPECT_EQ(backtrack_solutions(n).size(), counts[n]) << n;
}

TEST(QueensProperty, SolverMatchesBothOracles) {
  for (std::size_t n = 0; n <= 8; ++n) {
    const QueensResult r = solve_queens(n);
    EXPECT_TRUE(r.complete()) << n;
    EXPECT_EQ(r.placements, backtrack_solutions(n)) << n;
    EXPECT_EQ(r.placements, oracle_solutions(n)) << n;
    EXPECT_EQ(r.answers.size(), r.placements.size()) << "no duplicate answers for n=" << n;
    for (const Placement& p : r.placements) EXPECT_EQ(placement_defect(p), "");
  }
}

TEST(Queens, ZeroQueensIsTheEmptyPlacement) {
  const QueensResult r = solve_queens(0);
  ASSERT_EQ(r.placements.size(), 1u);
  EXPECT_TRUE(r.placements.begin()->rows_by_column.empty());
}

TEST(Queens, DepthLimitMakesRunIncomplete) {
  const QueensResult r = solve_queens(4, SolveLimits{3, std::nullopt});
  EXPECT_FALSE(r.complete());
  EXPECT_EQ(r.status, SolveStatus::Incomplete);
  EXPECT_TRUE(r.placements.empty());
  const QueensResult capped = solve_queens(6, SolveLimits{10000, 1});
  EXPECT_EQ(capped.status, SolveStatus::AnswerLimit);
  EXPECT_EQ(capped.placements.size(), 1u);
}

TEST(Queens, QueryShape) {
  const Atom q = build_query(3);
  EXPECT_EQ(q.predicate(), "pqs");
  EXPECT_EQ(numeral_value(q.arg(0)), 3u);
  EXPECT_EQ(spine_elements(q.arg(1)).size(), 3u);
  EXPECT_FALSE(q.is_ground());
  EXPECT_TRUE(ground_with_filler(q.as_term()).is_ground());
}

TEST(Decode, Errors) {
  EXPECT_THROW(decode_answer(A("pq(s(0),[s(0)],a,a)")), DecodeError);
  EXPECT_THROW(decode_answer(A("pqs(a,[s(0)],a,a)")), DecodeError);
  EXPECT_THROW(decode_answer(A("pqs(s(0),[a],a,a)")), DecodeError);
  EXPECT_THROW(decode_answer(A("pqs(s(0),[s(0)|T],a,a)")), DecodeError);
  EXPECT_THROW(decode_answer(A("pqs(2,[1,2],a,a)")), DecodeError) << "diagonal";
  EXPECT_THROW(decode_answer(A("pqs(2,[1,1],a,a)")), DecodeError) << "not a permutation";
  EXPECT_THROW(decode_answer(A("pqs(3,[1,2],a,a)")), DecodeError) << "length";
  const Placement p = decode_answer(A("pqs(4,[2,4,1,3],a,a)"));
  EXPECT_EQ(to_string(p), "4: 2 4 1 3");
}

TEST(Decode, DefectReasons) {
  EXPECT_EQ(placement_defect({1, {1}}), "");
  EXPECT_NE(placement_defect({2, {1, 2}}).find("diagonal"), std::string::npos);
  EXPECT_NE(placement_defect({2, {2, 2}}).find("permutation"), std::string::npos);
}

TEST(Queens, ProgramWithoutDiagonalCheckFailsDecoding) {
  // Without the pq check every column list of length n is an answer.
  const Program p = parse_program("pqs(0,_,_,_).\npqs(s(I),Cs,Us,[_|Ds]) :- pqs(I,Cs,[_|Us],Ds).\n");
  EXPECT_THROW(solve_queens(p, 2), DecodeError);
}

}  // namespace
}  // namespace dq
