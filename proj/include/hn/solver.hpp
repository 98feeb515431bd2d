#pragma once

#include "hn/families.hpp"
#include "hn/instance.hpp"
#include "hn/mps.hpp"
#include "hn/rational.hpp"

namespace hn {

struct SolveResult {
  Allocation allocation;
  Rational lp_value;
  PairFamily family;
  RowSystem rows;  // rows[h] belongs to family.pairs[h]
  MpsState state;
};

/// Happy nucleolus: lexicographic maximization over the explicit family with
/// total equal to the fractional cover value.
SolveResult solve_happy_nucleolus(const SetCoverInstance& inst);

/// Same scheme over a caller-supplied family. The result is the happy
/// nucleolus only if the family determines it.
SolveResult solve_with_family(const SetCoverInstance& inst, PairFamily family);

}  // namespace hn
