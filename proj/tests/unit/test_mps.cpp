#include "doctest.h"

#include <algorithm>

#include "hn/errors.hpp"
#include "hn/families.hpp"
#include "hn/generators.hpp"
#include "hn/lp.hpp"
#include "hn/mps.hpp"
#include "hn/random.hpp"

using hn::Rational;

TEST_CASE("chain(4) stages and allocation") {
  const auto inst = hn::chain_instance(4);
  const auto rows = hn::to_rows(inst, hn::build_c_star(inst));
  const auto [y, state] = hn::lexmax(rows, 4);
  CHECK(y == hn::Allocation({Rational(1, 2), Rational(3, 4), Rational(7, 8), Rational(15, 8)}));
  REQUIRE(state.stages.size() == 3);
  CHECK(state.stages[0].epsilon == Rational(1, 2));
  CHECK(state.stages[1].epsilon == Rational(3, 4));
  CHECK(state.stages[2].epsilon == Rational(7, 8));
}

TEST_CASE("first stage on chain(3) fixes the prefix and the complement of p1") {
  const auto inst = hn::chain_instance(3);
  const auto rows = hn::to_rows(inst, hn::build_c_star(inst));
  const auto program = hn::build_stage_program(rows, {}, 3);
  const auto cert = hn::lp::solve(program.lp);
  REQUIRE(cert.status == hn::lp::Status::optimal);
  CHECK(cert.objective == Rational(1, 2));
  const auto state = hn::fix_stage({}, program, cert);
  std::vector<hn::Coalition> fixed;
  for (const auto& [h, eps] : state.fixed) {
    CHECK(eps == Rational(1, 2));
    fixed.push_back(rows.rows[h].coalition);
  }
  std::sort(fixed.begin(), fixed.end());
  CHECK(fixed == std::vector<hn::Coalition>{{0}, {1, 2}});
}

TEST_CASE("fix_stage refuses a certificate without positive duals") {
  const auto inst = hn::chain_instance(2);
  const auto rows = hn::to_rows(inst, hn::build_c_star(inst));
  const auto program = hn::build_stage_program(rows, {}, 2);
  auto cert = hn::lp::solve(program.lp);
  std::fill(cert.duals.begin(), cert.duals.end(), Rational(0));
  CHECK_THROWS_AS(hn::fix_stage({}, program, cert), hn::InternalError);
}

TEST_CASE("single player without rows") {
  const hn::RowSystem rows{1, {}};
  const auto [y, state] = hn::lexmax(rows, 7);
  CHECK(y == hn::Allocation({7}));
  CHECK(state.stages.empty());
  CHECK(hn::uniqueness_check(rows, {}, 7));
}

TEST_CASE("uniqueness check") {
  const auto chain2 = hn::chain_instance(2);
  const auto rows2 = hn::to_rows(chain2, hn::build_c_star(chain2));
  hn::MpsState after_first;
  after_first.fixed.emplace(0, Rational(1, 2));  // ({p1}, {p1}) at excess 1/2
  CHECK(hn::uniqueness_check(rows2, after_first, 2));

  const auto chain4 = hn::chain_instance(4);
  const auto rows4 = hn::to_rows(chain4, hn::build_c_star(chain4));
  const auto program = hn::build_stage_program(rows4, {}, 4);
  const auto state = hn::fix_stage({}, program, hn::lp::solve(program.lp));
  CHECK_FALSE(hn::uniqueness_check(rows4, state, 4));
}

TEST_CASE("negative totals are infeasible") {
  const hn::RowSystem rows{2, {{{0}, 1}}};
  CHECK_THROWS_AS(hn::lexmax(rows, -1), hn::InfeasibleError);
}

TEST_CASE("rows that do not pin a point are underdetermined") {
  // only y1 + y2 = 2 and y1 <= 5: y is free along the segment
  const hn::RowSystem rows{2, {{{0, 1}, 5}}};
  CHECK_THROWS_AS(hn::lexmax(rows, 2), hn::UnderdeterminedError);
}

TEST_CASE("row order does not change the lexicographic optimum") {
  hn::Rng rng(5);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto inst = hn::random_instance({5, 8, seed, 10, 4});
    auto rows = hn::to_rows(inst, hn::build_c_star(inst));
    const auto total = hn::lp::fractional_cover_value(inst);
    const auto base = hn::lexmax(rows, total).allocation;
    for (std::size_t i = rows.rows.size(); i > 1; --i) std::swap(rows.rows[i - 1], rows.rows[rng.uniform(0, i - 1)]);
    CHECK(hn::lexmax(rows, total).allocation == base);
  }
}

TEST_CASE("unbounded variant matches when the bounds are slack") {
  const auto inst = hn::chain_instance(5);
  const auto rows = hn::to_rows(inst, hn::build_c_star(inst));
  CHECK(hn::lexmax_unbounded(rows, 5) == hn::lexmax(rows, 5).allocation.values());
}
