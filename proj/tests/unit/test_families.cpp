#include "doctest.h"

#include <algorithm>

#include "hn/errors.hpp"
#include "hn/families.hpp"
#include "hn/generators.hpp"

using hn::SimplePair;

namespace {

hn::SetCoverInstance two_player_example() { return hn::SetCoverInstance::build(2, {{{0}, 1}, {{0, 1}, 1}}); }

}  // namespace

TEST_CASE("explicit family of the two-player example") {
  const auto family = hn::build_c_star(two_player_example());
  CHECK(family.provenance == hn::Provenance::c_star);
  const std::vector<SimplePair> expected{{{0}, 0}, {{1}, 1}, {{0}, 1}};
  CHECK(family.pairs == expected);
}

TEST_CASE("explicit family of chain(3) in canonical order") {
  const auto family = hn::build_c_star(hn::chain_instance(3));
  const std::vector<SimplePair> expected{
      {{0}, 0}, {{0, 1}, 1}, {{1}, 1}, {{0}, 1}, {{1, 2}, 2}, {{0, 2}, 2}, {{0, 1}, 2},
  };
  CHECK(family.pairs == expected);
}

TEST_CASE("a single set covering everything yields its removals only") {
  const auto inst = hn::SetCoverInstance::build(3, {{{0, 1, 2}, 3}});
  const auto family = hn::build_c_star(inst);
  const std::vector<SimplePair> expected{{{1, 2}, 0}, {{0, 2}, 0}, {{0, 1}, 0}};
  CHECK(family.pairs == expected);
}

TEST_CASE("explicit family size bounds and cost independence") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto inst = hn::random_instance({6, 9, seed, 10, 3});
    const auto family = hn::build_c_star(inst);
    CHECK(family.size() <= inst.n_sets() * (inst.n_players() + 1));
    const bool all_large = std::all_of(inst.sets().begin(), inst.sets().end(),
                                       [](const hn::CoverSet& s) { return s.members.size() >= 2; });
    if (all_large) CHECK(family.size() < inst.n_players() * inst.n_sets());
    for (const auto& pair : family.pairs) {
      CHECK(hn::is_subset(pair.coalition, inst.set(pair.set_index).members));
      CHECK(pair.coalition.size() < inst.n_players());
    }
    std::vector<hn::Rational> doubled;
    for (const auto& s : inst.sets()) doubled.push_back(2 * s.cost + 1);
    CHECK(hn::build_c_star(hn::with_costs(inst, doubled)).pairs == family.pairs);
    CHECK_NOTHROW(hn::check_family(inst, family));
  }
}

TEST_CASE("minimum-cost restriction of the explicit family") {
  const auto small = hn::build_c_star_star(two_player_example());
  CHECK(small.size() == 3);

  const auto chain = hn::build_c_star_star(hn::chain_instance(3));
  CHECK_FALSE(chain.contains({{0}, 1}));
  CHECK_FALSE(chain.contains({{0, 1}, 2}));
  CHECK(chain.contains({{0}, 0}));
  CHECK(chain.contains({{1, 2}, 2}));

  // a free set covering {p1} makes every other pair for {p1} redundant
  const auto free_inst = hn::SetCoverInstance::build(2, {{{0}, 0}, {{0, 1}, 1}});
  CHECK_FALSE(hn::build_c_star_star(free_inst).contains({{0}, 1}));
  const auto paid_inst = hn::SetCoverInstance::build(2, {{{0}, 2}, {{0, 1}, 1}});
  CHECK(hn::build_c_star_star(paid_inst).contains({{0}, 1}));
}

TEST_CASE("families nest") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto inst = hn::random_instance({5, 7, seed, 6, 2});
    const auto star = hn::build_c_star(inst);
    const auto star_star = hn::build_c_star_star(inst);
    const auto simple = hn::build_c_simple(inst);
    for (const auto& pair : star_star.pairs) CHECK(star.contains(pair));
    for (const auto& pair : star.pairs) CHECK(simple.contains(pair));
  }
}

TEST_CASE("sampled simple pairs") {
  const auto inst = hn::random_instance({6, 9, 4, 10, 3});
  CHECK(hn::sample_simple_pairs(inst, 0, 1).size() == 0);
  const auto a = hn::sample_simple_pairs(inst, 15, 99);
  const auto b = hn::sample_simple_pairs(inst, 15, 99);
  CHECK(a.pairs == b.pairs);
  CHECK(a.size() == 15);
  CHECK_NOTHROW(hn::check_family(inst, a));
  CHECK(hn::sample_simple_pairs(inst, 15, 100).pairs != a.pairs);
}

TEST_CASE("merged and without") {
  const auto inst = hn::chain_instance(3);
  const auto star = hn::build_c_star(inst);
  const auto simple = hn::build_c_simple(inst);
  const auto both = hn::merged(star, simple);
  CHECK(both.size() == simple.size());
  CHECK(std::equal(star.pairs.begin(), star.pairs.end(), both.pairs.begin()));
  const auto fewer = hn::without(simple, star.pairs.front());
  CHECK(fewer.size() + 1 == simple.size());
  CHECK_FALSE(fewer.contains(star.pairs.front()));
}

TEST_CASE("check_family rejects repeats") {
  const auto inst = hn::chain_instance(2);
  hn::PairFamily family{{{{0}, 0}, {{0}, 0}}, hn::Provenance::custom};
  CHECK_THROWS_AS(hn::check_family(inst, family), std::invalid_argument);
}
