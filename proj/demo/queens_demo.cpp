// Walkthrough of the library: solve 6-queens, look at the bounded model, then
// check the program against its specification and break it on purpose.

#include <iostream>

#include "dq/model.hpp"
#include "dq/mutation.hpp"
#include "dq/nqueens.hpp"
#include "dq/printer.hpp"
#include "dq/report.hpp"
#include "dq/verifier.hpp"

int main() {
  using namespace dq;
  const Program p = nqueens_program();
  std::cout << to_string(p) << "\n";

  const QueensResult r = solve_queens(6);
  std::cout << "6-queens, " << r.placements.size() << " placements (" << to_string(r.status) << "):\n";
  for (const Placement& pl : r.placements) std::cout << "  " << to_string(pl) << "\n";

  const UniverseBounds small = UniverseBounds::of(1, 1);
  const Interpretation m = bounded_model(p, small);
  std::cout << "\nbounded model at N=1 L=1: " << m.count() << " atoms from " << m.generator_count()
            << " generators, e.g.\n";
  int shown = 0;
  m.for_each_atom([&](const Atom& a) {
    std::cout << "  " << to_string(a, PrintOptions{true}) << "\n";
    return ++shown < 5;
  });

  const UniverseBounds b = UniverseBounds::of(3, 3);
  std::cout << "\n" << report_text(check_model(p, SpecId::S, b));
  std::cout << report_text(check_covered(SpecId::S0, p, b, b.with_list_len(4)));

  CheckOptions few;
  few.max_counterexamples = 3;
  const Program broken = mutate(p, parse_mutation("unshift-head:2:4"));
  std::cout << "\nafter unshift-head:2:4\n" << report_text(check_model(broken, SpecId::S, b, few));
  return 0;
}
