#include "doctest.h"

#include "hn/checks.hpp"
#include "hn/generators.hpp"

TEST_CASE("oracle and superset checks pass on random instances") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const auto inst = hn::random_instance({5, 7, seed, 10, 3});
    CHECK(hn::check_oracle(inst).passed);
    CHECK(hn::check_superset(inst, seed, 3).passed);
    CHECK(hn::check_solution(inst, hn::solve_happy_nucleolus(inst)).passed);
  }
}

TEST_CASE("automorphisms of the triangle with equal costs") {
  const auto inst = hn::triangle_instance(2, 2, 2);
  CHECK(hn::find_automorphisms(inst).size() == 5);
  CHECK(hn::check_symmetry(inst).passed);
  CHECK(hn::find_automorphisms(hn::triangle_instance(1, 2, 3)).empty());
}

TEST_CASE("symmetry check detects asymmetric allocations") {
  const auto inst = hn::triangle_instance(2, 2, 2);
  const auto report = hn::check_symmetry(inst, hn::Allocation({0, 1, 2}));
  CHECK_FALSE(report.passed);
  CHECK_FALSE(report.failures.empty());
}

TEST_CASE("transpositions are used for larger instances") {
  std::vector<hn::CoverSet> sets;
  for (std::size_t p = 0; p < 9; ++p) sets.push_back({{p}, 1});
  const auto inst = hn::SetCoverInstance::build(9, sets);
  CHECK(hn::find_automorphisms(inst).size() == 36);
}

TEST_CASE("adversarial check on a star system") {
  const auto star = hn::SetCoverInstance::build(
      4, {{{0}, 1}, {{1}, 1}, {{2}, 1}, {{3}, 1}, {{0, 1}, 1}, {{0, 2}, 1}, {{0, 3}, 1}});
  const auto report = hn::check_adversarial(star);
  CHECK(report.passed);
  CHECK(report.cases == hn::build_c_star(star).size());
}

TEST_CASE("disjoint union check") {
  CHECK(hn::check_disjoint_union(hn::chain_instance(3), hn::triangle_instance(1, 2, 2)).passed);
}

TEST_CASE("report summary") {
  hn::CheckReport report;
  report.cases = 2;
  CHECK(report.summary() == "PASS (2 cases)");
  report.fail("boom");
  CHECK(report.summary() == "FAIL (2 cases, 1 failure)\n  boom");
}
