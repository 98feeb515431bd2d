#include "doctest.h"

#include <algorithm>

#include "hn/errors.hpp"
#include "hn/generators.hpp"
#include "hn/lp.hpp"
#include "hn/random.hpp"

using hn::Rational;
namespace lp = hn::lp;

TEST_CASE("single variable bounded by one row") {
  lp::LinearProgram program(lp::Sense::maximize);
  const auto x = program.add_variable(1);
  program.add_row({{x, 1}}, lp::Relation::less_equal, 1);
  const auto cert = lp::solve(program);
  REQUIRE(cert.status == lp::Status::optimal);
  CHECK(cert.primal[0] == 1);
  CHECK(cert.duals[0] == 1);
  CHECK(cert.objective == 1);
  CHECK(lp::check_certificate(program, cert).empty());
}

TEST_CASE("minimization with equality and free variables") {
  lp::LinearProgram program(lp::Sense::minimize);
  const auto x = program.add_variable(2);
  const auto y = program.add_variable(3, std::nullopt, std::nullopt);
  program.add_row({{x, 1}, {y, 1}}, lp::Relation::equal, 4);
  program.add_row({{y, 1}}, lp::Relation::greater_equal, -1);
  const auto cert = lp::solve(program);
  REQUIRE(cert.status == lp::Status::optimal);
  CHECK(cert.primal[0] == 5);
  CHECK(cert.primal[1] == -1);
  CHECK(cert.objective == 7);
  CHECK(lp::check_certificate(program, cert).empty());
}

TEST_CASE("infeasible programs carry a Farkas certificate") {
  lp::LinearProgram program(lp::Sense::maximize);
  const auto x = program.add_variable(1);
  program.add_row({{x, 1}}, lp::Relation::less_equal, 1);
  program.add_row({{x, 1}}, lp::Relation::greater_equal, 2);
  const auto cert = lp::solve(program);
  CHECK(cert.status == lp::Status::infeasible);
  CHECK(lp::check_certificate(program, cert).empty());
}

TEST_CASE("unbounded programs carry an improving ray") {
  lp::LinearProgram program(lp::Sense::maximize);
  const auto x = program.add_variable(1);
  const auto y = program.add_variable(0);
  program.add_row({{x, 1}, {y, -1}}, lp::Relation::less_equal, 1);
  const auto cert = lp::solve(program);
  CHECK(cert.status == lp::Status::unbounded);
  CHECK(lp::check_certificate(program, cert).empty());
}

TEST_CASE("tampered certificates are rejected") {
  lp::LinearProgram program(lp::Sense::maximize);
  const auto x = program.add_variable(1);
  program.add_row({{x, 1}}, lp::Relation::less_equal, 1);
  auto cert = lp::solve(program);
  cert.duals[0] = 2;
  CHECK_FALSE(lp::check_certificate(program, cert).empty());
}

TEST_CASE("unknown variables are structural errors") {
  lp::LinearProgram program;
  program.add_variable(1);
  CHECK_THROWS_AS(program.add_row({{3, 1}}, lp::Relation::equal, 0), std::invalid_argument);
  CHECK_THROWS_AS(program.add_dense_row({1, 2}, lp::Relation::equal, 0), std::invalid_argument);
}

TEST_CASE("fractional cover values") {
  CHECK(lp::fractional_cover_value(hn::chain_instance(6)) == 6);
  CHECK(lp::fractional_cover_value(hn::triangle_instance(3, 4, 6)) == Rational(13, 2));
  CHECK(lp::fractional_cover_value(hn::triangle_instance(1, 1, 3)) == 2);
}

TEST_CASE("primal, dual and automatic routes agree and row order does not matter") {
  hn::Rng rng(11);
  for (int round = 0; round < 40; ++round) {
    lp::LinearProgram program(round % 2 ? lp::Sense::maximize : lp::Sense::minimize);
    const std::size_t n = 2 + rng.uniform(0, 3);
    for (std::size_t j = 0; j < n; ++j) {
      const auto c = Rational(static_cast<long>(rng.uniform(0, 10)) - 5);
      if (rng.uniform(0, 3) == 0) {
        program.add_variable(c, std::nullopt, Rational(static_cast<long>(rng.uniform(0, 4))));
      } else {
        program.add_variable(c, Rational(0), Rational(static_cast<long>(rng.uniform(1, 6))));
      }
    }
    std::vector<lp::Constraint> rows;
    const std::size_t m = 1 + rng.uniform(0, 20);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<lp::Term> terms;
      for (std::size_t j = 0; j < n; ++j) {
        if (rng.coin()) terms.push_back({j, Rational(static_cast<long>(rng.uniform(0, 6)) - 2)});
      }
      const auto rel = static_cast<lp::Relation>(rng.uniform(0, 2));
      rows.push_back({terms, rel, Rational(static_cast<long>(rng.uniform(0, 12)) - 3)});
    }
    auto build = [&](const std::vector<lp::Constraint>& order) {
      lp::LinearProgram copy(program.sense());
      for (const auto& v : program.variables()) copy.add_variable(v.objective, v.lower, v.upper);
      for (const auto& r : order) copy.add_row(r.terms, r.relation, r.rhs);
      return copy;
    };
    const auto base = build(rows);
    auto reversed_rows = rows;
    std::reverse(reversed_rows.begin(), reversed_rows.end());

    const auto a = lp::solve(base, {lp::PivotRule::bland, lp::Strategy::primal, true});
    const auto b = lp::solve(base, {lp::PivotRule::dantzig, lp::Strategy::dual, true});
    const auto c = lp::solve(build(reversed_rows));
    CHECK(a.status == b.status);
    CHECK(a.status == c.status);
    if (a.status == lp::Status::optimal && b.status == lp::Status::optimal && c.status == lp::Status::optimal) {
      CHECK(a.objective == b.objective);
      CHECK(a.objective == c.objective);
    }
  }
}

TEST_CASE("every solve is verified") {
  lp::reset_counters();
  lp::fractional_cover_value(hn::chain_instance(4));
  const auto counts = lp::counters();
  CHECK(counts.solves >= 1);
  CHECK(counts.verified == counts.solves);
}

TEST_CASE("constraint matrix dumps as CSV") {
  lp::LinearProgram program;
  const auto x = program.add_variable(1);
  program.add_row({{x, Rational(1, 2)}}, lp::Relation::less_equal, 3);
  CHECK(lp::dump_csv(program).find("1/2") != std::string::npos);
}
