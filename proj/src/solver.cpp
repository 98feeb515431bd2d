#include "hn/solver.hpp"

#include "hn/lp.hpp"

namespace hn {

SolveResult solve_happy_nucleolus(const SetCoverInstance& inst) {
  return solve_with_family(inst, build_c_star(inst));
}

SolveResult solve_with_family(const SetCoverInstance& inst, PairFamily family) {
  check_family(inst, family);
  const Rational total = lp::fractional_cover_value(inst);
  RowSystem rows = to_rows(inst, family);
  auto [allocation, state] = lexmax(rows, total);
  return {std::move(allocation), total, std::move(family), std::move(rows), std::move(state)};
}

}  // namespace hn
