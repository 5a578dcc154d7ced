// The n-queens program, its query, answer decoding and a brute-force oracle.

#pragma once

#include <algorithm>
#include <cstdlib>
#include <future>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dq/parser.hpp"
#include "dq/sld.hpp"
#include "dq/term.hpp"

namespace dq {

inline constexpr const char* kNQueensSource =
    "pqs(0,_,_,_).\n"
    "pqs(s(I),Cs,Us,[_|Ds]) :- pqs(I,Cs,[_|Us],Ds), pq(s(I),Cs,Us,Ds).\n"
    "pq(I,[I|_],[I|_],[I|_]).\n"
    "pq(I,[_|Cs],[_|Us],[_|Ds]) :- pq(I,Cs,Us,Ds).\n";

inline Program nqueens_program() { return parse_program(kNQueensSource); }

// pqs(n, [V1,...,Vn], W1, W2) with fresh variables.
inline Atom build_query(std::size_t n) {
  std::vector<Term> qs;
  for (std::size_t j = 1; j <= n; ++j) qs.push_back(Term::fresh_var("V" + std::to_string(j)));
  return Atom("pqs", {numeral(n), make_list(qs), Term::fresh_var("W1"), Term::fresh_var("W2")});
}

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Entry j (0-based here, column j+1 on the board) is the row of the queen
// placed in that column.
struct Placement {
  std::size_t n = 0;
  std::vector<std::size_t> rows_by_column;

  friend auto operator<=>(const Placement&, const Placement&) = default;
};

inline std::string to_string(const Placement& p) {
  std::string s = std::to_string(p.n) + ":";
  for (std::size_t r : p.rows_by_column) s += " " + std::to_string(r);
  return s;
}

// Reason a placement is not a solution, or empty if it is one.
inline std::string placement_defect(const Placement& p) {
  if (p.rows_by_column.size() != p.n) return "wrong number of columns";
  std::vector<bool> seen(p.n + 1, false);
  for (std::size_t r : p.rows_by_column) {
    if (r < 1 || r > p.n || seen[r]) return "rows are not a permutation of 1.." + std::to_string(p.n);
    seen[r] = true;
  }
  for (std::size_t x = 0; x < p.n; ++x) {
    for (std::size_t y = x + 1; y < p.n; ++y) {
      const long long dr = std::llabs(static_cast<long long>(p.rows_by_column[x]) - static_cast<long long>(p.rows_by_column[y]));
      if (dr == static_cast<long long>(y - x)) {
        return "queens in columns " + std::to_string(x + 1) + " and " + std::to_string(y + 1) + " share a diagonal";
      }
    }
  }
  return {};
}

// Decodes an instantiated query pqs(n, q, _, _).
inline Placement decode_answer(const Atom& answer) {
  if (answer.predicate() != "pqs" || answer.arity() != 4) throw DecodeError("answer is not a pqs/4 atom");
  const std::optional<std::size_t> n = numeral_value(answer.arg(0));
  if (!n) throw DecodeError("first argument is not a numeral");
  Placement p{*n, {}};
  const Term* cur = &answer.arg(1);
  std::size_t pos = 1;
  for (; is_cons(*cur); cur = &cur->arg(1), ++pos) {
    const std::optional<std::size_t> r = numeral_value(cur->arg(0));
    if (!r) throw DecodeError("member " + std::to_string(pos) + " of the column list is not a numeral");
    p.rows_by_column.push_back(*r);
  }
  if (!is_nil(*cur)) throw DecodeError("column list is not a proper list (tail after member " + std::to_string(pos - 1) + ")");
  if (const std::string why = placement_defect(p); !why.empty()) throw DecodeError("not a solution: " + why);
  return p;
}

inline constexpr std::size_t kOracleMaxN = 10;

// All n-queens solutions by permutation search, one task per first-column row.
inline std::set<Placement> oracle_solutions(std::size_t n) {
  if (n > kOracleMaxN) throw std::invalid_argument("oracle_solutions supports n <= " + std::to_string(kOracleMaxN));
  if (n == 0) return {Placement{0, {}}};
  auto from_first = [n](std::size_t first) {
    std::vector<std::size_t> rest;
    for (std::size_t r = 1; r <= n; ++r) {
      if (r != first) rest.push_back(r);
    }
    std::vector<Placement> found;
    do {
      std::vector<std::size_t> rows{first};
      rows.insert(rows.end(), rest.begin(), rest.end());
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) {
        for (std::size_t y = x + 1; y < n && ok; ++y) {
          const std::size_t dr = rows[x] > rows[y] ? rows[x] - rows[y] : rows[y] - rows[x];
          ok = dr != y - x;
        }
      }
      if (ok) found.push_back({n, rows});
    } while (std::next_permutation(rest.begin(), rest.end()));
    return found;
  };
  std::vector<std::future<std::vector<Placement>>> tasks;
  for (std::size_t first = 1; first <= n; ++first) tasks.push_back(std::async(std::launch::async, from_first, first));
  std::set<Placement> out;
  for (auto& t : tasks) {
    for (Placement& p : t.get()) out.insert(std::move(p));
  }
  return out;
}

// Replaces every variable by the filler constant.
inline Term ground_with_filler(const Term& t) {
  std::vector<Term> vars;
  collect_vars(t, vars);
  Substitution s;
  for (const Term& v : vars) s.bind(v, filler());
  return apply(s, t);
}

struct QueensResult {
  std::set<Placement> placements;
  std::vector<Atom> answers;  // instantiated queries, in SLD order
  SolveStatus status = SolveStatus::Exhausted;

  bool complete() const { return status == SolveStatus::Exhausted; }
};

// Runs the query for n against program (the embedded one by default).
inline QueensResult solve_queens(const Program& program, std::size_t n, const SolveLimits& limits = {}) {
  const Atom query = build_query(n);
  SldSolver solver(program, {query}, limits);
  QueensResult r;
  while (auto s = solver.next()) {
    Atom a = apply(*s, query);
    Placement p = decode_answer(a);
    if (!r.placements.insert(std::move(p)).second) throw DecodeError("two answers decode to the same placement");
    r.answers.push_back(std::move(a));
  }
  r.status = solver.status();
  return r;
}

inline QueensResult solve_queens(std::size_t n, const SolveLimits& limits = {}) {
  return solve_queens(nqueens_program(), n, limits);
}

}  // namespace dq
