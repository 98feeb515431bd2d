#include "hn/mps.hpp"

#include <stdexcept>

#include "hn/errors.hpp"

namespace hn {

namespace {

void check_rows(const RowSystem& rows) {
  for (const auto& row : rows.rows) {
    for (PlayerId p : row.coalition) {
      if (p >= rows.n_players) throw std::invalid_argument("row references player outside 0..n-1");
    }
  }
}

std::vector<lp::Term> incidence(const Coalition& coalition) {
  std::vector<lp::Term> terms;
  terms.reserve(coalition.size() + 1);
  for (PlayerId p : coalition) terms.push_back({p, Rational(1)});
  return terms;
}

void add_player_variables(lp::LinearProgram& program, std::size_t n, bool nonnegative) {
  for (std::size_t p = 0; p < n; ++p) {
    if (nonnegative) {
      program.add_variable(0);
    } else {
      program.add_variable(0, std::nullopt, std::nullopt);
    }
  }
}

void add_total_row(lp::LinearProgram& program, std::size_t n, const Rational& total) {
  std::vector<lp::Term> all;
  for (std::size_t p = 0; p < n; ++p) all.push_back({p, Rational(1)});
  program.add_row(std::move(all), lp::Relation::equal, total);
}

template <bool Nonnegative>
std::vector<Rational> run_scheme(const RowSystem& rows, const Rational& total, MpsState& state) {
  check_rows(rows);
  if (rows.n_players == 0) throw std::invalid_argument("row system without players");
  if (Nonnegative && total < 0) throw InfeasibleError("no nonnegative allocation sums to " + to_string(total));

  for (;;) {
    if (auto point = pinned_point(rows, state, total, Nonnegative)) {
      state.witness = *point;
      break;
    }
    if (state.fixed.size() == rows.rows.size()) {
      throw UnderdeterminedError("all " + std::to_string(rows.rows.size()) +
                                 " rows are fixed but the allocation is not unique");
    }
    auto program = build_stage_program(rows, state, total, Nonnegative);
    auto certificate = lp::solve(program.lp);
    if (certificate.status == lp::Status::infeasible) throw InfeasibleError("stage program is infeasible");
    if (certificate.status == lp::Status::unbounded) {
      throw UnderdeterminedError("minimum excess is unbounded; the rows do not determine an allocation");
    }
    state = fix_stage(std::move(state), program, certificate);
  }

  // every fixed row keeps its recorded excess at the final point
  for (const auto& [handle, epsilon] : state.fixed) {
    const auto& row = rows.rows[handle];
    Rational load = 0;
    for (PlayerId p : row.coalition) load += state.witness[p];
    if (row.cost - load != epsilon) {
      throw InternalError("fixed row " + std::to_string(handle) + " drifted from its excess");
    }
  }
  return state.witness;
}

}  // namespace

RowSystem to_rows(const SetCoverInstance& inst, const PairFamily& family) {
  RowSystem rows;
  rows.n_players = inst.n_players();
  rows.rows.reserve(family.size());
  for (const auto& pair : family.pairs) {
    check_pair(inst, pair);
    rows.rows.push_back({pair.coalition, inst.set(pair.set_index).cost});
  }
  return rows;
}

StageProgram build_stage_program(const RowSystem& rows, const MpsState& state, const Rational& total,
                                 bool nonnegative) {
  StageProgram program{lp::LinearProgram(lp::Sense::maximize), {}, {}};
  const std::size_t n = rows.n_players;
  add_player_variables(program.lp, n, nonnegative);
  const std::size_t epsilon = program.lp.add_variable(1, std::nullopt, std::nullopt);
  add_total_row(program.lp, n, total);

  for (std::size_t h = 0; h < rows.rows.size(); ++h) {
    if (state.fixed.contains(h)) continue;
    auto terms = incidence(rows.rows[h].coalition);
    terms.push_back({epsilon, Rational(1)});
    program.lp.add_row(std::move(terms), lp::Relation::less_equal, rows.rows[h].cost);
    program.unfixed.push_back(h);
  }
  for (const auto& [h, excess] : state.fixed) {
    program.lp.add_row(incidence(rows.rows[h].coalition), lp::Relation::equal, rows.rows[h].cost - excess);
    program.fixed.push_back(h);
  }
  return program;
}

MpsState fix_stage(MpsState state, const StageProgram& program, const lp::LPCertificate& certificate) {
  if (certificate.status != lp::Status::optimal) throw InternalError("stage certificate is not optimal");
  const Rational& epsilon = certificate.objective;

  std::vector<std::size_t> newly_fixed;
  for (std::size_t k = 0; k < program.unfixed.size(); ++k) {
    if (certificate.duals.at(1 + k) > 0) newly_fixed.push_back(program.unfixed[k]);
  }
  if (newly_fixed.empty()) throw InternalError("no unfixed row carries a positive dual multiplier");

  for (std::size_t h : newly_fixed) state.fixed.emplace(h, epsilon);
  if (!state.stages.empty() && state.stages.back().epsilon == epsilon) {
    auto& last = state.stages.back().fixed;
    last.insert(last.end(), newly_fixed.begin(), newly_fixed.end());
  } else {
    if (!state.stages.empty() && epsilon < state.stages.back().epsilon) {
      throw InternalError("stage excess decreased from " + to_string(state.stages.back().epsilon) + " to " +
                          to_string(epsilon));
    }
    state.stages.push_back({epsilon, std::move(newly_fixed)});
  }
  const std::size_t n = program.lp.n_vars() - 1;
  state.witness.assign(certificate.primal.begin(), certificate.primal.begin() + static_cast<std::ptrdiff_t>(n));
  return state;
}

std::optional<std::vector<Rational>> pinned_point(const RowSystem& rows, const MpsState& state,
                                                   const Rational& total, bool nonnegative) {
  const std::size_t n = rows.n_players;
  auto directed = [&](std::size_t coordinate, lp::Sense sense) {
    lp::LinearProgram program(sense);
    for (std::size_t p = 0; p < n; ++p) {
      const Rational objective = p == coordinate ? 1 : 0;
      if (nonnegative) {
        program.add_variable(objective);
      } else {
        program.add_variable(objective, std::nullopt, std::nullopt);
      }
    }
    add_total_row(program, n, total);
    for (const auto& [h, excess] : state.fixed) {
      program.add_row(incidence(rows.rows[h].coalition), lp::Relation::equal, rows.rows[h].cost - excess);
    }
    return program;
  };

  std::vector<Rational> point;
  for (std::size_t p = 0; p < n; ++p) {
    for (auto sense : {lp::Sense::minimize, lp::Sense::maximize}) {
      auto cert = lp::solve(directed(p, sense));
      if (cert.status == lp::Status::infeasible) throw InfeasibleError("allocation region is empty");
      if (cert.status == lp::Status::unbounded) return std::nullopt;
      if (point.empty()) {
        point = cert.primal;
      } else if (cert.objective != point[p]) {
        return std::nullopt;
      }
    }
  }
  return point;
}

bool uniqueness_check(const RowSystem& rows, const MpsState& state, const Rational& total) {
  return pinned_point(rows, state, total).has_value();
}

LexmaxResult lexmax(const RowSystem& rows, const Rational& total) {
  MpsState state;
  auto values = run_scheme<true>(rows, total, state);
  return {Allocation(std::move(values)), std::move(state)};
}

std::vector<Rational> lexmax_unbounded(const RowSystem& rows, const Rational& total, MpsState* state) {
  MpsState local;
  auto values = run_scheme<false>(rows, total, local);
  if (state) *state = std::move(local);
  return values;
}

}  // namespace hn
