#include "doctest.h"

#include "hn/errors.hpp"
#include "hn/generators.hpp"
#include "hn/instance.hpp"

using hn::Allocation;
using hn::Rational;

namespace {

hn::InstanceData two_players(std::vector<hn::CoverSet> sets) { return {{"1", "2"}, std::move(sets)}; }

}  // namespace

TEST_CASE("validate_instance accepts a covering instance") {
  CHECK(hn::validate_instance(two_players({{{0, 1}, 3}})).ok());
}

TEST_CASE("validate_instance reports uncovered players") {
  const auto report = hn::validate_instance(two_players({{{0}, 1}}));
  REQUIRE_FALSE(report.ok());
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].kind == hn::Violation::Kind::uncovered_player);
  CHECK(report.violations[0].message == "player 2 uncovered");
}

TEST_CASE("validate_instance reports negative costs and empty sets") {
  const auto report = hn::validate_instance(two_players({{{0, 1}, -1}, {{}, 2}}));
  CHECK(report.violations.size() == 2);
}

TEST_CASE("duplicate sets keep the cheaper cost") {
  hn::InstanceData data{{"1"}, {{{0}, 2}, {{0}, 5}}};
  const auto report = hn::validate_instance(data);
  CHECK(report.ok());
  REQUIRE(report.merged.size() == 1);
  CHECK(report.merged[0].surviving_cost == 2);
  const auto inst = hn::SetCoverInstance::build(data);
  REQUIRE(inst.n_sets() == 1);
  CHECK(inst.set(0).cost == 2);
}

TEST_CASE("build rejects invalid instances") {
  CHECK_THROWS_AS(hn::SetCoverInstance::build(two_players({{{0}, 1}})), hn::InstanceError);
}

TEST_CASE("pair_excess is cost minus allocated amount") {
  const auto inst = hn::chain_instance(3);
  const Allocation y({Rational(1, 2), Rational(3, 4), Rational(7, 4)});
  CHECK(hn::pair_excess(inst, y, hn::SimplePair{{0}, 0}) == Rational(1, 2));
  CHECK(hn::pair_excess(inst, y, hn::SimplePair{{0, 2}, 2}) == Rational(3, 4));
  CHECK(hn::pair_excess(inst, y, hn::GeneralPair{{0, 1, 2}, {0, 2}}) == 1);
  CHECK(hn::pair_excess(inst, Allocation::zeros(3), hn::GeneralPair{{1}, {1}}) == 2);
}

TEST_CASE("pair_excess is affine in the allocation") {
  const auto inst = hn::chain_instance(4);
  const Allocation a({1, 2, 0, Rational(1, 3)}), b({Rational(1, 2), 0, 5, 1});
  std::vector<Rational> sum;
  for (std::size_t p = 0; p < 4; ++p) sum.push_back(a[p] + b[p]);
  const hn::GeneralPair pair{{1, 2, 3}, {3}};
  CHECK(hn::pair_excess(inst, a, pair) + hn::pair_excess(inst, b, pair) - hn::pair_excess(inst, Allocation::zeros(4), pair) ==
        hn::pair_excess(inst, Allocation(sum), pair));
}

TEST_CASE("invalid pairs are rejected") {
  const auto inst = hn::chain_instance(3);
  CHECK_THROWS_AS(hn::check_pair(inst, hn::SimplePair{{1}, 0}), std::invalid_argument);
  CHECK_THROWS_AS(hn::check_pair(inst, hn::SimplePair{{}, 1}), std::invalid_argument);
  CHECK_THROWS_AS(hn::check_pair(inst, hn::SimplePair{{0}, 7}), std::invalid_argument);
  CHECK_THROWS_AS(hn::check_pair(inst, hn::GeneralPair{{2}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("group rationality on sets") {
  const auto inst = hn::triangle_instance(3, 4, 6);
  CHECK(hn::group_rationality_on_sets(inst, Allocation({Rational(1, 2), Rational(5, 2), Rational(7, 2)})));
  CHECK_FALSE(hn::group_rationality_on_sets(inst, Allocation({3, 1, 1})));
  CHECK(hn::group_rationality_on_sets(inst, Allocation::zeros(3)));
}

TEST_CASE("disjoint union re-indexes the second instance") {
  const auto one = hn::SetCoverInstance::build(1, {{{0}, 1}});
  const auto two = hn::disjoint_union(one, one);
  CHECK(two.n_players() == 2);
  CHECK(two.n_sets() == 2);
  CHECK(two.set(1).members == hn::Coalition{1});
  CHECK(two.label(0) != two.label(1));

  const auto five = hn::disjoint_union(hn::chain_instance(3), hn::chain_instance(2));
  CHECK(five.n_players() == 5);
  CHECK(five.n_sets() == 5);
}

TEST_CASE("allocations reject negative entries") {
  CHECK_THROWS_AS(Allocation({1, -1}), std::invalid_argument);
  const Allocation y({1, 2, 3});
  CHECK(y.total() == 6);
  CHECK(y.restricted(1, 2) == Allocation({2, 3}));
}
