#include "hn/checks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "hn/errors.hpp"
#include "hn/families.hpp"
#include "hn/generators.hpp"
#include "hn/oracle.hpp"

namespace hn {

namespace {

std::string render(const SetCoverInstance& inst, const Allocation& y) {
  std::string out = "(";
  for (PlayerId p = 0; p < y.size(); ++p) {
    if (p) out += ", ";
    out += inst.label(p) + "=" + to_string(y[p]);
  }
  return out + ")";
}

bool preserves_sets(const SetCoverInstance& inst, const std::map<Coalition, Rational>& costs, const Permutation& pi) {
  for (const auto& set : inst.sets()) {
    Coalition image;
    image.reserve(set.members.size());
    for (PlayerId p : set.members) image.push_back(pi[p]);
    std::sort(image.begin(), image.end());
    auto it = costs.find(image);
    if (it == costs.end() || it->second != set.cost) return false;
  }
  return true;
}

}  // namespace

void CheckReport::fail(std::string message) {
  passed = false;
  failures.push_back(std::move(message));
}

void CheckReport::absorb(const CheckReport& other) {
  cases += other.cases;
  if (!other.passed) passed = false;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::string CheckReport::summary() const {
  std::ostringstream out;
  out << (passed ? "PASS" : "FAIL") << " (" << cases << " case" << (cases == 1 ? "" : "s");
  if (!failures.empty()) out << ", " << failures.size() << " failure" << (failures.size() == 1 ? "" : "s");
  out << ")";
  for (const auto& f : failures) out << "\n  " << f;
  return out.str();
}

CheckReport check_oracle(const SetCoverInstance& inst) {
  CheckReport report;
  report.cases = 1;
  const auto solved = solve_happy_nucleolus(inst);
  const auto reference = happy_nucleolus_bruteforce(inst);
  if (!(solved.allocation == reference)) {
    report.fail("solver " + render(inst, solved.allocation) + " differs from oracle " + render(inst, reference));
  }
  return report;
}

CheckReport check_superset(const SetCoverInstance& inst, std::uint64_t seed, std::size_t rounds,
                           std::size_t max_extra) {
  CheckReport report;
  const auto base = solve_happy_nucleolus(inst);
  for (std::size_t round = 0; round < rounds; ++round) {
    const std::uint64_t round_seed = seed * 1'000'003 + round;
    const std::size_t count = static_cast<std::size_t>(round_seed % (max_extra + 1));
    auto extended = merged(base.family, sample_simple_pairs(inst, count, round_seed));
    const auto result = solve_with_family(inst, extended);
    ++report.cases;
    if (!(result.allocation == base.allocation)) {
      report.fail("adding " + std::to_string(extended.size() - base.family.size()) + " pairs changed " +
                  render(inst, base.allocation) + " to " + render(inst, result.allocation));
    }
  }
  return report;
}

std::vector<Permutation> find_automorphisms(const SetCoverInstance& inst) {
  const std::size_t n = inst.n_players();
  std::map<Coalition, Rational> costs;
  for (const auto& set : inst.sets()) costs.emplace(set.members, set.cost);

  std::vector<Permutation> found;
  Permutation identity(n);
  std::iota(identity.begin(), identity.end(), PlayerId{0});
  if (n <= 8) {
    Permutation pi = identity;
    while (std::next_permutation(pi.begin(), pi.end())) {
      if (preserves_sets(inst, costs, pi)) found.push_back(pi);
    }
  } else {
    for (PlayerId a = 0; a < n; ++a) {
      for (PlayerId b = a + 1; b < n; ++b) {
        Permutation pi = identity;
        std::swap(pi[a], pi[b]);
        if (preserves_sets(inst, costs, pi)) found.push_back(pi);
      }
    }
  }
  return found;
}

CheckReport check_symmetry(const SetCoverInstance& inst, const Allocation& y) {
  CheckReport report;
  for (const auto& pi : find_automorphisms(inst)) {
    ++report.cases;
    for (PlayerId p = 0; p < inst.n_players(); ++p) {
      if (y[pi[p]] != y[p]) {
        report.fail("players " + inst.label(p) + " and " + inst.label(pi[p]) +
                    " are interchangeable but receive " + to_string(y[p]) + " and " + to_string(y[pi[p]]));
        break;
      }
    }
  }
  return report;
}

CheckReport check_symmetry(const SetCoverInstance& inst) {
  return check_symmetry(inst, solve_happy_nucleolus(inst).allocation);
}

CheckReport check_adversarial(const SetCoverInstance& inst) {
  CheckReport report;
  const PairFamily all_simple = build_c_simple(inst);
  for (const auto& pair : build_c_star(inst).pairs) {
    ++report.cases;
    const auto adversary = adversarial_costs(inst, pair);
    const auto costed = with_costs(inst, adversary.costs);
    const auto happy = solve_happy_nucleolus(costed).allocation;
    const std::string what = "pair (" + inst.format(pair.coalition) + ", " +
                             inst.format(inst.set(pair.set_index).members) + ")";
    try {
      const auto reduced = solve_with_family(costed, without(all_simple, pair)).allocation;
      if (reduced == happy) report.fail(what + ": reduced family still yields " + render(inst, happy));
    } catch (const UnderdeterminedError&) {
      // an underdetermined family does not determine the happy nucleolus either
    }
  }
  return report;
}

CheckReport check_solution(const SetCoverInstance& inst, const SolveResult& result) {
  CheckReport report;
  report.cases = 1;
  const auto& y = result.allocation;
  if (y.total() != result.lp_value) {
    report.fail("allocation sums to " + to_string(y.total()) + ", expected " + to_string(result.lp_value));
  }
  for (std::size_t t = 0; t < inst.n_sets(); ++t) {
    const auto& set = inst.set(t);
    if (y.sum(set.members) > set.cost) {
      report.fail("set " + inst.format(set.members) + " receives " + to_string(y.sum(set.members)) +
                  " above its cost " + to_string(set.cost));
    }
  }
  const auto& stages = result.state.stages;
  for (std::size_t i = 1; i < stages.size(); ++i) {
    if (!(stages[i - 1].epsilon < stages[i].epsilon)) {
      report.fail("stage " + std::to_string(i + 1) + " does not increase the excess");
    }
  }
  if (stages.size() > std::max<std::size_t>(result.rows.rows.size(), 1)) {
    report.fail("more stages than rows");
  }
  for (const auto& [handle, epsilon] : result.state.fixed) {
    const auto& row = result.rows.rows.at(handle);
    if (row.cost - y.sum(row.coalition) != epsilon) {
      report.fail("row " + std::to_string(handle) + " left its fixed excess " + to_string(epsilon));
    }
  }
  return report;
}

CheckReport check_disjoint_union(const SetCoverInstance& first, const SetCoverInstance& second) {
  CheckReport report;
  report.cases = 1;
  const auto joint = solve_happy_nucleolus(disjoint_union(first, second)).allocation;
  const auto a = solve_happy_nucleolus(first).allocation;
  const auto b = solve_happy_nucleolus(second).allocation;
  if (!(joint.restricted(0, first.n_players()) == a) ||
      !(joint.restricted(first.n_players(), second.n_players()) == b)) {
    report.fail("solution of the union differs from the solutions of its parts");
  }
  return report;
}

}  // namespace hn
