#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hn/instance.hpp"
#include "hn/mps.hpp"
#include "hn/rational.hpp"

// Brute-force reference routines. Exponential in the number of players; they
// exist to check the polynomial solver on small instances.
namespace hn {

/// Hard limit for exact cover search.
inline constexpr std::size_t kMaxCoverPlayers = 20;
inline constexpr std::size_t kDefaultOracleCapacity = 12;
inline constexpr std::size_t kDefaultUnhappyCapacity = 10;

/// Player limit for the full-coalition oracles: HN_MAX_ORACLE_N when set
/// (clamped to 20), otherwise 12.
std::size_t oracle_capacity();

struct CoverResult {
  Rational cost;
  std::vector<std::size_t> cover;  // set indices, ascending
};

/// Minimum-cost cover of a nonempty coalition by branch and bound. Among
/// optimal covers the lexicographically smallest index list is returned.
/// Throws CapacityError beyond 20 players.
CoverResult min_cover(const SetCoverInstance& inst, const Coalition& coalition);

/// Minimum cover cost of every coalition, by dynamic programming over subsets.
class CoalitionTable {
 public:
  explicit CoalitionTable(const SetCoverInstance& inst);

  std::size_t n_players() const { return n_; }
  /// Coalitions are bitmasks over player indices; mask 0 costs 0.
  const Rational& cost(std::uint32_t mask) const { return cost_.at(mask); }
  /// One optimal cover of `mask`.
  std::vector<std::size_t> cover(std::uint32_t mask) const;
  std::uint32_t full_mask() const { return static_cast<std::uint32_t>((std::uint64_t{1} << n_) - 1); }

 private:
  std::size_t n_;
  std::vector<Rational> cost_;
  std::vector<std::uint32_t> choice_;  // set used for the lowest player of the mask
  std::vector<std::uint32_t> set_masks_;
};

std::uint32_t to_mask(const Coalition& coalition);
Coalition from_mask(std::uint32_t mask);

/// Minimum integral cover cost of all players.
Rational integral_cover_value(const SetCoverInstance& inst);

/// Lexicographic maximization over all coalitions except P (whose excess is
/// constant) with total equal to the fractional cover value.
Allocation happy_nucleolus_bruteforce(const SetCoverInstance& inst);

struct UnhappyResult {
  Allocation allocation;
  Rational integral_cost;
  /// True when dropping y >= 0 would change the result.
  bool nonnegativity_binding = false;
};

/// Classical nucleolus of the cover-cost game: distributes the integral
/// optimum. Keeps y >= 0 and reports whether it binds.
UnhappyResult unhappy_nucleolus_bruteforce(const SetCoverInstance& inst);

/// Excesses of all nonempty coalitions, nondecreasing.
std::vector<Rational> full_excess_vector(const SetCoverInstance& inst, const Allocation& y);

struct CoalitionExcess {
  Coalition coalition;
  Rational cover_cost;
  Rational excess;
};

/// All nonempty coalitions ordered by size, then lexicographically.
std::vector<CoalitionExcess> excess_table(const SetCoverInstance& inst, const Allocation& y);

/// Header "coalition,cover_cost,excess" followed by one line per row.
std::string excess_table_csv(const SetCoverInstance& inst, const std::vector<CoalitionExcess>& rows);

/// Rows for every coalition except P with its minimum cover cost.
RowSystem all_coalition_rows(const SetCoverInstance& inst);

}  // namespace hn
