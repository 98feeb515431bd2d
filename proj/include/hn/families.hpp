#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hn/instance.hpp"

namespace hn {

enum class Provenance { c_star, c_star_star, c_simple, c_simple_sampled, custom };

std::string to_string(Provenance provenance);

/// Ordered list of simple pairs (S, {T}). Order fixes LP row order.
struct PairFamily {
  std::vector<SimplePair> pairs;
  Provenance provenance = Provenance::custom;

  std::size_t size() const { return pairs.size(); }
  bool contains(const SimplePair& pair) const;
};

/// All (S, {T}) with S = T or S = T minus one player, S not empty and not P.
/// Canonical order: by set index; within a set the full-set pair first, then
/// removals by increasing player index. Independent of the costs.
PairFamily build_c_star(const SetCoverInstance& inst);

/// The pairs of build_c_star whose single set is a minimum-cost cover of the
/// coalition. Exact cover search; throws CapacityError beyond 20 players.
/// Depends on the costs; meant for testing, not for the solve path.
PairFamily build_c_star_star(const SetCoverInstance& inst);

/// Every simple pair (S, {T}) with nonempty S contained in T. Throws
/// CapacityError when a set has more than 20 members.
PairFamily build_c_simple(const SetCoverInstance& inst);

/// Up to `count` distinct simple pairs: a uniform set, then a uniform nonempty
/// subset of it. Deterministic per seed.
PairFamily sample_simple_pairs(const SetCoverInstance& inst, std::size_t count, std::uint64_t seed);

/// `base` followed by the pairs of `extra` not already present.
PairFamily merged(const PairFamily& base, const PairFamily& extra);

/// `family` with `pair` removed.
PairFamily without(const PairFamily& family, const SimplePair& pair);

/// Throws std::invalid_argument if a pair is invalid or repeated.
void check_family(const SetCoverInstance& inst, const PairFamily& family);

}  // namespace hn
