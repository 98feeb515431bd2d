#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "hn/families.hpp"
#include "hn/instance.hpp"
#include "hn/lp.hpp"
#include "hn/rational.hpp"

namespace hn {

/// One inequality y(S) <= cost. Its excess at y is cost - y(S).
struct ExcessRow {
  Coalition coalition;
  Rational cost;
};

/// Rows of A y <= b with 0/1 incidence rows. A row's handle is its position.
struct RowSystem {
  std::size_t n_players = 0;
  std::vector<ExcessRow> rows;
};

/// Rows for the pairs of a family, in family order.
RowSystem to_rows(const SetCoverInstance& inst, const PairFamily& family);

struct Stage {
  Rational epsilon;
  std::vector<std::size_t> fixed;  // row handles fixed at `epsilon`
};

/// Progress of the lexicographic maximization.
///
/// Stage epsilons strictly increase: consecutive LP rounds that reach the same
/// optimum are merged into one stage.
struct MpsState {
  std::map<std::size_t, Rational> fixed;  // handle -> fixed excess
  std::vector<Stage> stages;
  std::vector<Rational> witness;  // allocation of the latest stage program
};

/// Stage program: maximize epsilon subject to y(P) = total, y(S) + epsilon <= c
/// for unfixed rows, y(S) = c - epsilon_fixed for fixed rows, y >= 0.
/// LP row 0 is the total; rows 1..k are `unfixed` in order; then `fixed`.
/// Variables 0..n-1 are y, variable n is epsilon.
struct StageProgram {
  lp::LinearProgram lp;
  std::vector<std::size_t> unfixed;
  std::vector<std::size_t> fixed;
};

StageProgram build_stage_program(const RowSystem& rows, const MpsState& state, const Rational& total,
                                 bool nonnegative = true);

/// Moves every unfixed row with a positive dual multiplier into the fixed set
/// at excess epsilon*. Throws InternalError if the certificate is not optimal
/// or no unfixed row has positive dual.
MpsState fix_stage(MpsState state, const StageProgram& program, const lp::LPCertificate& certificate);

/// The allocation if {y(P) = total, fixed rows at their excess, y >= 0} is a
/// single point; decided by minimizing and maximizing every coordinate.
/// Throws InfeasibleError if the region is empty.
std::optional<std::vector<Rational>> pinned_point(const RowSystem& rows, const MpsState& state,
                                                   const Rational& total, bool nonnegative = true);

bool uniqueness_check(const RowSystem& rows, const MpsState& state, const Rational& total);

struct LexmaxResult {
  Allocation allocation;
  MpsState state;
};

/// The unique y >= 0 with y(P) = total whose sorted row-excess vector is
/// lexicographically maximal.
///
/// Throws InfeasibleError when total < 0, UnderdeterminedError when all rows
/// are fixed and y is still not unique (the rows do not determine a point).
LexmaxResult lexmax(const RowSystem& rows, const Rational& total);

/// Same scheme without the y >= 0 bounds. Entries may be negative.
std::vector<Rational> lexmax_unbounded(const RowSystem& rows, const Rational& total, MpsState* state = nullptr);

}  // namespace hn
