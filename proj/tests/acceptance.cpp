// Acceptance suite: one PASS/FAIL line per criterion. Optional arguments
// select criteria by key (e.g. `hn_acceptance chain triangle`).

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hn/checks.hpp"
#include "hn/errors.hpp"
#include "hn/generators.hpp"
#include "hn/json_io.hpp"
#include "hn/lp.hpp"
#include "hn/oracle.hpp"
#include "hn/random.hpp"
#include "hn/solver.hpp"

#ifndef HN_DATA_DIR
#define HN_DATA_DIR "data"
#endif

namespace {

using hn::Allocation;
using hn::Rational;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool condition, const std::string& message) {
    if (condition) return;
    if (passed) detail.clear();
    passed = false;
    if (!detail.empty()) detail += "; ";
    detail += message;
  }
};

struct Criterion {
  std::string key;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

hn::SetCoverInstance load_vrp(const std::string& file) {
  return hn::vrp_to_setcover(hn::json::vrp_spec_from(hn::json::read_file(std::string(HN_DATA_DIR) + "/" + file)));
}

std::string show(const Allocation& y) {
  std::string out = "(";
  for (std::size_t p = 0; p < y.size(); ++p) out += (p ? ", " : "") + hn::to_string(y[p]);
  return out + ")";
}

Allocation ints(std::initializer_list<long> values) {
  std::vector<Rational> y;
  for (long v : values) y.push_back(Rational(v));
  return Allocation(std::move(y));
}

Outcome five_customer_graph() {
  Outcome out;
  const auto inst = load_vrp("vrp_five_customers.json");
  out.require(inst.n_sets() == 31, "expected 31 tours, got " + std::to_string(inst.n_sets()));
  const auto result = hn::solve_happy_nucleolus(inst);
  const Allocation expected({Rational(3, 2), Rational(3, 2), Rational(1), Rational(3, 2), Rational(7, 2)});
  out.require(result.lp_value == 9, "LP value " + hn::to_string(result.lp_value));
  out.require(result.allocation == expected, "allocation " + show(result.allocation));
  if (out.passed) out.detail = "y = " + show(result.allocation) + ", LP 9";
  return out;
}

Outcome capacity_two_graph() {
  Outcome out;
  const auto inst = load_vrp("vrp_capacity2.json");
  const auto happy = hn::solve_happy_nucleolus(inst);
  out.require(happy.lp_value == 18, "LP value " + hn::to_string(happy.lp_value));
  out.require(happy.allocation == ints({4, 4, 4, 6}), "happy " + show(happy.allocation));
  const auto unhappy = hn::unhappy_nucleolus_bruteforce(inst);
  out.require(unhappy.integral_cost == 21, "integral optimum " + hn::to_string(unhappy.integral_cost));
  out.require(unhappy.allocation == ints({5, 5, 5, 6}), "unhappy " + show(unhappy.allocation));
  out.require(!unhappy.nonnegativity_binding, "nonnegativity binds for the unhappy nucleolus");

  // columns {a}, {d}, {a,b}, {a,d}, {a,b,c}, {a,b,d}, {a,b,c,d}
  const std::vector<hn::Coalition> columns{{0}, {3}, {0, 1}, {0, 3}, {0, 1, 2}, {0, 1, 3}, {0, 1, 2, 3}};
  const std::vector<long> right{4, 0, 0, 3, 4, 0, 3};
  const std::vector<long> left{3, 0, -2, 2, 1, -2, 0};
  auto compare = [&](const Allocation& y, const std::vector<long>& expected, const char* name) {
    const auto table = hn::excess_table(inst, y);
    for (std::size_t k = 0; k < columns.size(); ++k) {
      for (const auto& row : table) {
        if (row.coalition == columns[k] && row.excess != expected[k]) {
          out.require(false, std::string(name) + " excess of " + inst.format(columns[k]) + " is " +
                                 hn::to_string(row.excess));
        }
      }
    }
  };
  compare(happy.allocation, right, "happy");
  compare(unhappy.allocation, left, "unhappy");
  if (out.passed) out.detail = "happy (4,4,4,6), unhappy (5,5,5,6), 14 table entries";
  return out;
}

Outcome chain_closed_form() {
  Outcome out;
  for (std::size_t n = 2; n <= 16; ++n) {
    const auto inst = hn::chain_instance(n);
    const auto result = hn::solve_happy_nucleolus(inst);
    const std::string tag = "n=" + std::to_string(n) + ": ";
    out.require(result.allocation == hn::chain_allocation(n), tag + "allocation " + show(result.allocation));
    const auto& stages = result.state.stages;
    out.require(stages.size() == n - 1, tag + std::to_string(stages.size()) + " stages");
    Rational half_power = 1;
    for (std::size_t i = 1; i <= std::min(stages.size(), n - 1); ++i) {
      half_power /= 2;
      const auto& stage = stages[i - 1];
      out.require(stage.epsilon == 1 - half_power, tag + "stage " + std::to_string(i) + " epsilon " +
                                                       hn::to_string(stage.epsilon));
      hn::Coalition prefix, complement;
      for (hn::PlayerId p = 0; p < n; ++p) {
        if (p < i) prefix.push_back(p);
        if (p != i - 1) complement.push_back(p);
      }
      std::set<hn::Coalition> fixed;
      for (auto h : stage.fixed) fixed.insert(result.rows.rows[h].coalition);
      out.require(stage.fixed.size() == 2 && fixed == std::set<hn::Coalition>{prefix, complement},
                  tag + "stage " + std::to_string(i) + " fixes unexpected rows");
    }
  }
  if (out.passed) out.detail = "n = 2..16, allocations and stage logs exact";
  return out;
}

Outcome triangle_closed_form() {
  Outcome out;
  hn::Rng rng(2024);
  auto draw = [&] {
    const auto den = static_cast<std::int64_t>(rng.uniform(1, 12));
    return hn::make_rational(static_cast<std::int64_t>(rng.uniform(0, static_cast<std::uint64_t>(10 * den))), den);
  };
  for (int k = 0; k < 200; ++k) {
    std::vector<Rational> c{draw(), draw(), draw()};
    std::sort(c.begin(), c.end());
    const auto y = hn::solve_happy_nucleolus(hn::triangle_instance(c[0], c[1], c[2])).allocation;
    out.require(y == hn::triangle_allocation(c[0], c[1], c[2]),
                "costs " + hn::to_string(c[0]) + "," + hn::to_string(c[1]) + "," + hn::to_string(c[2]) + " gave " +
                    show(y));
  }
  if (out.passed) out.detail = "200 random cost triples";
  return out;
}

std::vector<hn::SetCoverInstance> random_corpus() {
  std::vector<hn::SetCoverInstance> corpus;
  hn::Rng rng(20240501);
  for (int k = 0; k < 500; ++k) {
    hn::RandomSpec spec;
    spec.n_players = 1 + rng.uniform(0, 6);
    spec.n_sets = 1 + rng.uniform(0, 11);
    spec.seed = rng.uniform(0, 1'000'000'000);
    spec.max_cost = 10;
    spec.max_denominator = static_cast<std::int64_t>(1 + rng.uniform(0, 5));
    corpus.push_back(hn::random_instance(spec));
  }
  return corpus;
}

const std::vector<hn::SetCoverInstance>& corpus() {
  static const auto instances = random_corpus();
  return instances;
}

Outcome oracle_equivalence() {
  Outcome out;
  std::size_t supersets = 0;
  for (std::size_t k = 0; k < corpus().size(); ++k) {
    const auto& inst = corpus()[k];
    const auto oracle = hn::check_oracle(inst);
    out.require(oracle.passed, "instance " + std::to_string(k) + ": " + oracle.summary());
    const auto superset = hn::check_superset(inst, k + 1, 2, 20);
    supersets += superset.cases;
    out.require(superset.passed, "instance " + std::to_string(k) + ": " + superset.summary());
  }
  if (out.passed) {
    out.detail = std::to_string(corpus().size()) + " instances, " + std::to_string(supersets) + " extended families";
  }
  return out;
}

hn::SetCoverInstance with_all_singletons(hn::SetCoverInstance inst) {
  auto data = inst.data();
  for (hn::PlayerId p = 0; p < inst.n_players(); ++p) data.sets.push_back({{p}, 1});
  return hn::SetCoverInstance::build(std::move(data));
}

Outcome adversarial_minimality() {
  Outcome out;
  std::vector<hn::SetCoverInstance> systems{
      hn::SetCoverInstance::build(hn::json::instance_data_from(
          hn::json::read_file(std::string(HN_DATA_DIR) + "/star_system.json"))),
      with_all_singletons(hn::random_instance({5, 4, 17, 5, 1})),
      with_all_singletons(hn::random_instance({6, 5, 23, 5, 1})),
  };
  std::size_t pairs = 0;
  for (const auto& inst : systems) {
    out.require(hn::complement_condition(inst), "set system violates the complement condition");
    const auto report = hn::check_adversarial(inst);
    pairs += report.cases;
    out.require(report.passed, report.summary());
  }
  if (out.passed) out.detail = std::to_string(pairs) + " pairs over 3 set systems, all discrepant";
  return out;
}

Outcome euclidean_with_penalties() {
  Outcome out;
  const auto inst = load_vrp("vrp_grid15.json");
  const auto result = hn::solve_happy_nucleolus(inst);
  const std::vector<std::pair<std::string, std::string>> expected{
      {"a", "2.43"}, {"b", "1.92"}, {"c", "2.84"}, {"d", "2.33"}, {"e", "3.05"}, {"f", "4.09"}, {"g", "5.62"}, {"h", "5.24"},
      {"i", "6.00"}, {"j", "1.00"}, {"k", "3.02"}, {"l", "6.70"}, {"m", "3.18"}, {"n", "5.85"}, {"o", "5.51"},
  };
  const Rational tolerance(1, 100);
  Rational worst = 0;
  for (std::size_t p = 0; p < expected.size(); ++p) {
    out.require(inst.label(p) == expected[p].first, "player order differs");
    const Rational gap = abs(result.allocation[p] - hn::parse_rational(expected[p].second));
    if (gap > worst) worst = gap;
    out.require(gap <= tolerance, inst.label(p) + " = " + hn::to_fixed(result.allocation[p], 4) + ", expected " +
                                      expected[p].second);
  }
  if (out.passed) {
    out.detail = std::to_string(inst.n_sets()) + " sets, " + std::to_string(result.state.stages.size()) +
                 " stages, max deviation " + hn::to_fixed(worst, 4);
  }
  return out;
}

// Copy of `inst` with an extra player interchangeable with player `twin`.
hn::SetCoverInstance with_twin(const hn::SetCoverInstance& inst, hn::PlayerId twin) {
  auto data = inst.data();
  const hn::PlayerId clone = inst.n_players();
  data.players.push_back(inst.label(twin) + "'");
  const auto original = data.sets;
  for (const auto& set : original) {
    if (!std::binary_search(set.members.begin(), set.members.end(), twin)) continue;
    hn::Coalition swapped;
    for (auto p : set.members) swapped.push_back(p == twin ? clone : p);
    data.sets.push_back({hn::make_coalition(std::move(swapped)), set.cost});
  }
  return hn::SetCoverInstance::build(std::move(data));
}

Outcome invariant_suites() {
  Outcome out;
  hn::lp::reset_counters();
  std::size_t symmetric = 0, unions = 0;
  for (std::size_t k = 0; k < corpus().size(); ++k) {
    const auto& inst = corpus()[k];
    const std::string tag = "instance " + std::to_string(k) + ": ";
    const auto result = hn::solve_happy_nucleolus(inst);
    const auto solution = hn::check_solution(inst, result);
    out.require(solution.passed, tag + solution.summary());
    out.require(hn::group_rationality_on_sets(inst, result.allocation), tag + "group rationality fails");

    const auto symmetry = hn::check_symmetry(inst, result.allocation);
    symmetric += symmetry.cases;
    out.require(symmetry.passed, tag + symmetry.summary());
    if (inst.n_players() < 7) {
      const auto twin = with_twin(inst, k % inst.n_players());
      const auto twin_symmetry = hn::check_symmetry(twin);
      symmetric += twin_symmetry.cases;
      out.require(twin_symmetry.cases > 0 && twin_symmetry.passed, tag + "twin " + twin_symmetry.summary());
    }
    if (k + 1 < corpus().size()) {
      const auto split = hn::check_disjoint_union(inst, corpus()[k + 1]);
      unions += split.cases;
      out.require(split.passed, tag + split.summary());
    }
  }
  const auto counts = hn::lp::counters();
  out.require(counts.solves > 0 && counts.verified == counts.solves,
              std::to_string(counts.solves - counts.verified) + " LP solves skipped verification");
  if (out.passed) {
    out.detail = std::to_string(corpus().size()) + " instances, " + std::to_string(symmetric) + " automorphisms, " +
                 std::to_string(unions) + " unions, " + std::to_string(counts.verified) + " LP certificates verified";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"five-customers", "five-customer graph VRP, exact happy nucleolus and LP value", 1, five_customer_graph},
      {"capacity-two", "capacity-2 VRP, happy and classical nucleolus with excess table", 1, capacity_two_graph},
      {"chain", "chain instances n=2..16, closed form and stage log", 5, chain_closed_form},
      {"triangle", "triangle closed form on random costs", 0, triangle_closed_form},
      {"oracle", "explicit family equals brute force, also with extra pairs", 600, oracle_equivalence},
      {"minimality", "removing any explicit pair fails under adversarial costs", 0, adversarial_minimality},
      {"vrp15", "15-customer Euclidean VRP with penalties within 0.01", 600, euclidean_with_penalties},
      {"invariants", "rationality, symmetry, unions, stage order, verified duality", 0, invariant_suites},
  };
  const std::set<std::string> selected(argv + 1, argv + argc);

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.contains(c.key)) continue;
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.passed = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      outcome.require(false, "took longer than the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget");
    }
    std::ostringstream timing;
    timing.precision(2);
    timing << std::fixed << seconds << " s";
    std::cout << (outcome.passed ? "PASS" : "FAIL") << "  " << c.key << ": " << c.title << " [" << timing.str() << "]"
              << (outcome.detail.empty() ? "" : "  -- " + outcome.detail) << std::endl;
    if (!outcome.passed) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
