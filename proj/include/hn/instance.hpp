#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hn/rational.hpp"

namespace hn {

/// Dense player index in 0..n-1.
using PlayerId = std::size_t;

/// Sorted, duplicate-free list of players.
using Coalition = std::vector<PlayerId>;

/// One available set T with its cost c(T).
struct CoverSet {
  Coalition members;
  Rational cost;

  friend bool operator==(const CoverSet&, const CoverSet&) = default;
};

/// Instance data as read from disk, before validation. May contain
/// duplicates, unsorted member lists or uncovered players.
struct InstanceData {
  std::vector<std::string> players;
  std::vector<CoverSet> sets;
};

struct Violation {
  enum class Kind { uncovered_player, negative_cost, empty_set, duplicate_set, member_out_of_range, duplicate_member };
  Kind kind;
  std::size_t index;  // player index for uncovered_player, set index otherwise
  std::string message;
};

/// A duplicate member set that normalization merges into `kept_index`.
struct MergedDuplicate {
  std::size_t kept_index;
  std::size_t dropped_index;
  Rational surviving_cost;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<MergedDuplicate> merged;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Checks the standing assumptions. Duplicate member sets are not violations;
/// they are listed in `merged` with the cost that survives (the minimum).
ValidationReport validate_instance(const InstanceData& data);

/// A validated set covering game (P, T, c). Member lists are sorted, every
/// player is covered, costs are nonnegative, and no two sets share a member
/// list. Immutable after construction.
class SetCoverInstance {
 public:
  /// Validates and normalizes. Duplicate member sets collapse to the cheapest;
  /// the first occurrence keeps its position. Throws InstanceError on any violation.
  static SetCoverInstance build(InstanceData data);

  /// Players labelled p1..pn.
  static SetCoverInstance build(std::size_t n_players, std::vector<CoverSet> sets);

  std::size_t n_players() const { return labels_.size(); }
  std::size_t n_sets() const { return sets_.size(); }
  const std::vector<CoverSet>& sets() const { return sets_; }
  const CoverSet& set(std::size_t index) const { return sets_.at(index); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(PlayerId p) const { return labels_.at(p); }

  /// Sets containing player p, ascending.
  const std::vector<std::size_t>& sets_containing(PlayerId p) const { return incidence_.at(p); }

  /// Index of the set with exactly these members, or n_sets() when absent.
  std::size_t find_set(const Coalition& members) const;

  InstanceData data() const { return {labels_, sets_}; }

  /// "{a,b}" using player labels.
  std::string format(const Coalition& coalition) const;

  friend bool operator==(const SetCoverInstance& a, const SetCoverInstance& b) {
    return a.labels_ == b.labels_ && a.sets_ == b.sets_;
  }

 private:
  SetCoverInstance() = default;

  std::vector<std::string> labels_;
  std::vector<CoverSet> sets_;
  std::vector<std::vector<std::size_t>> incidence_;
};

/// Value per player. All entries are nonnegative.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(std::vector<Rational> values);
  static Allocation zeros(std::size_t n);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](PlayerId p) const { return values_.at(p); }
  const std::vector<Rational>& values() const { return values_; }

  /// y(S)
  Rational sum(const Coalition& coalition) const;
  Rational total() const;

  Allocation restricted(PlayerId first, std::size_t count) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<Rational> values_;
};

/// (S, {T}): coalition S served by the single set with index `set_index`.
struct SimplePair {
  Coalition coalition;
  std::size_t set_index;

  friend bool operator==(const SimplePair&, const SimplePair&) = default;
  friend auto operator<=>(const SimplePair&, const SimplePair&) = default;
};

/// (S, U): coalition S and a family U of set indices covering it.
struct GeneralPair {
  Coalition coalition;
  std::vector<std::size_t> cover;
};

/// Throws std::invalid_argument (structural error) if the pair does not fit the instance.
void check_pair(const SetCoverInstance& inst, const SimplePair& pair);
void check_pair(const SetCoverInstance& inst, const GeneralPair& pair);

/// c(U) - y(S)
Rational pair_excess(const SetCoverInstance& inst, const Allocation& y, const GeneralPair& pair);
Rational pair_excess(const SetCoverInstance& inst, const Allocation& y, const SimplePair& pair);

/// True iff y(T) <= c(T) for every set T. By LP duality this is equivalent to
/// y(S) <= c(U) for every coalition S and every cover U of S.
bool group_rationality_on_sets(const SetCoverInstance& inst, const Allocation& y);

/// Players of `second` follow those of `first`; sets are carried over.
SetCoverInstance disjoint_union(const SetCoverInstance& first, const SetCoverInstance& second);

/// Sorted, deduplicated copy.
Coalition make_coalition(std::vector<PlayerId> players);

bool is_subset(const Coalition& inner, const Coalition& outer);

}  // namespace hn
