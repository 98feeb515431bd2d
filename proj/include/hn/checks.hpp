#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hn/instance.hpp"
#include "hn/solver.hpp"

namespace hn {

struct CheckReport {
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> failures;

  void fail(std::string message);
  void absorb(const CheckReport& other);
  std::string summary() const;
};

/// Solver over the explicit family equals the brute-force lexicographic optimum.
CheckReport check_oracle(const SetCoverInstance& inst);

/// Appending sampled simple pairs to the explicit family leaves the result unchanged.
CheckReport check_superset(const SetCoverInstance& inst, std::uint64_t seed, std::size_t rounds = 5,
                           std::size_t max_extra = 20);

using Permutation = std::vector<PlayerId>;

/// Player permutations mapping every set to a set of equal cost, identity
/// excluded. All permutations up to 8 players, transpositions beyond.
std::vector<Permutation> find_automorphisms(const SetCoverInstance& inst);

/// y is constant on every orbit of every automorphism.
CheckReport check_symmetry(const SetCoverInstance& inst);
CheckReport check_symmetry(const SetCoverInstance& inst, const Allocation& y);

/// For every pair of the explicit family, the adversarial costs make the
/// remaining simple pairs miss the happy nucleolus.
CheckReport check_adversarial(const SetCoverInstance& inst);

/// Group rationality on sets, strictly increasing stage values, fixed rows at
/// their recorded excess, stage count within the row count.
CheckReport check_solution(const SetCoverInstance& inst, const SolveResult& result);

/// Solving a disjoint union gives both parts' solutions side by side.
CheckReport check_disjoint_union(const SetCoverInstance& first, const SetCoverInstance& second);

}  // namespace hn
