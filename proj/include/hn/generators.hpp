#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hn/instance.hpp"
#include "hn/rational.hpp"

namespace hn {

inline constexpr std::size_t kMaxVrpCustomers = 20;
inline constexpr std::size_t kMaxTourLength = 6;

/// Vehicle routing data. Either Euclidean coordinates or a weighted graph whose
/// shortest-path metric is used.
struct VrpSpec {
  struct Point {
    Rational x;
    Rational y;
  };
  struct Edge {
    std::string from;
    std::string to;
    Rational weight;
  };
  enum class Mode { coords, graph };

  Mode mode = Mode::coords;
  std::vector<std::string> customers;  // labels, in player order

  // coords mode: one point per customer plus the depot
  std::vector<Point> coords;
  Point depot_point;

  // graph mode: undirected edges over named vertices; customers and the depot are vertices
  std::vector<Edge> edges;
  std::string depot_vertex;

  std::optional<std::size_t> capacity;  // unbounded when empty
  std::map<std::string, Rational> penalties;
  std::int64_t round_denom = 1'000'000;
};

/// One set per customer subset of size at most the capacity, costing the
/// shortest closed tour from the depot through it. Each penalty adds a
/// singleton set; duplicates keep the cheaper cost. Throws CapacityError past
/// 20 customers or tours longer than 6, InstanceError on malformed specs.
SetCoverInstance vrp_to_setcover(const VrpSpec& spec);

/// Shortest closed tour depot -> members -> depot over a distance matrix whose
/// index 0 is the depot; members index rows 1..n. Exhaustive over orders.
Rational tour_cost(const std::vector<std::vector<Rational>>& dist, const std::vector<std::size_t>& members);

/// Nested sets {p1..pi} with cost i.
SetCoverInstance chain_instance(std::size_t n);

/// Sets {p1,p2}, {p1,p3}, {p2,p3} with costs c1, c2, c3. Requires
/// 0 <= c1 <= c2 <= c3.
SetCoverInstance triangle_instance(const Rational& c1, const Rational& c2, const Rational& c3);

/// Closed-form allocation for the triangle.
Allocation triangle_allocation(const Rational& c1, const Rational& c2, const Rational& c3);

/// Closed-form allocation for the chain: 1 - 2^-i for i < n, 2 - 2^-(n-1) last.
Allocation chain_allocation(std::size_t n);

/// Every set's complement can be covered by sets disjoint from it.
bool complement_condition(const SetCoverInstance& inst);

/// Costs under which dropping one pair of the explicit family from all simple
/// pairs changes the lexicographic optimum.
struct AdversaryCase {
  std::vector<Rational> costs;
  bool full_set = false;     // the pair's coalition is its whole set
  PlayerId special_player;   // removed player, or the chosen outsider when full_set
};

/// Requires the complement condition and a pair (S, {T}) with S = T != P or
/// S = T minus one player. Throws std::invalid_argument otherwise.
AdversaryCase adversarial_costs(const SetCoverInstance& inst, const SimplePair& pair);

/// Same players and sets with new costs.
SetCoverInstance with_costs(const SetCoverInstance& inst, const std::vector<Rational>& costs);

struct RandomSpec {
  std::size_t n_players = 5;
  std::size_t n_sets = 8;
  std::uint64_t seed = 1;
  std::int64_t max_cost = 10;
  std::int64_t max_denominator = 4;
};

/// Random sets, patched so every player is covered, with rational costs
/// k/d in [0, max_cost]. Deterministic per seed.
SetCoverInstance random_instance(const RandomSpec& spec);

}  // namespace hn
