#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hn/checks.hpp"
#include "hn/errors.hpp"
#include "hn/families.hpp"
#include "hn/generators.hpp"
#include "hn/json_io.hpp"
#include "hn/lp.hpp"
#include "hn/oracle.hpp"
#include "hn/solver.hpp"

namespace {

using hn::json::Json;

enum Exit : int {
  kOk = 0,
  kInternal = 1,
  kBadInput = 2,
  kUnsolvable = 3,
  kCheckFailed = 4,
  kCapacity = 5,
};

struct Output {
  std::string path;

  void emit(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw hn::ParseError("cannot write '" + path + "'");
    out << text;
  }
};

hn::SetCoverInstance load_instance(const std::string& path) {
  return hn::SetCoverInstance::build(hn::json::instance_data_from(hn::json::read_file(path)));
}

// "c-star", "c-star-star" or "custom:<path>"
hn::PairFamily family_for(const hn::SetCoverInstance& inst, const std::string& choice) {
  if (choice == "c-star") return hn::build_c_star(inst);
  if (choice == "c-star-star") return hn::build_c_star_star(inst);
  if (choice.rfind("custom:", 0) == 0) return hn::json::family_from(hn::json::read_file(choice.substr(7)));
  throw std::invalid_argument("unknown family '" + choice + "'");
}

std::string solve_table(const hn::SetCoverInstance& inst, const Json& report) {
  std::ostringstream out;
  out << "lp value " << report["lp_value"]["decimal"].get<std::string>() << " ("
      << report["lp_value"]["exact"].get<std::string>() << ")\n";
  const auto& alloc = report["allocation"];
  for (std::size_t p = 0; p < inst.n_players(); ++p) {
    out << "  " << inst.label(p) << "  " << alloc["values"][p].get<std::string>() << "  "
        << alloc["decimals"][p].get<std::string>() << '\n';
  }
  out << "stages " << report["stages"].size() << '\n';
  for (const auto& stage : report["stages"]) {
    out << "  epsilon " << stage["epsilon"].get<std::string>() << ", fixed " << stage["fixed"].dump() << '\n';
  }
  return out.str();
}

int cmd_solve(const std::string& path, const std::string& family_choice, const std::string& method,
              const std::string& format, const Output& output) {
  const auto inst = load_instance(path);
  const auto start = std::chrono::steady_clock::now();
  Json report;

  if (method == "mps") {
    const auto result = family_choice == "c-star" ? hn::solve_happy_nucleolus(inst)
                                                  : hn::solve_with_family(inst, family_for(inst, family_choice));
    report["allocation"] = hn::json::allocation_to(inst, result.allocation);
    report["lp_value"] = {{"exact", hn::to_string(result.lp_value)}, {"decimal", hn::to_decimal(result.lp_value)}};
    report["family"] = {{"kind", hn::to_string(result.family.provenance)}, {"pairs", result.family.size()}};
    report["stages"] = hn::json::stages_to(result.state);
    Json loads = Json::array();
    for (const auto& set : inst.sets()) {
      loads.push_back({{"set", inst.format(set.members)},
                       {"load", hn::to_string(result.allocation.sum(set.members))},
                       {"cost", hn::to_string(set.cost)}});
    }
    report["set_loads"] = std::move(loads);
  } else if (method == "oracle") {
    const auto y = hn::happy_nucleolus_bruteforce(inst);
    const auto total = hn::lp::fractional_cover_value(inst);
    report["allocation"] = hn::json::allocation_to(inst, y);
    report["lp_value"] = {{"exact", hn::to_string(total)}, {"decimal", hn::to_decimal(total)}};
    report["stages"] = Json::array();
  } else if (method == "unhappy") {
    const auto result = hn::unhappy_nucleolus_bruteforce(inst);
    report["allocation"] = hn::json::allocation_to(inst, result.allocation);
    report["integral_cost"] = {{"exact", hn::to_string(result.integral_cost)},
                               {"decimal", hn::to_decimal(result.integral_cost)}};
    report["nonnegativity_binding"] = result.nonnegativity_binding;
    if (result.nonnegativity_binding) {
      std::cerr << "warning: y >= 0 binds for the unhappy nucleolus of this instance\n";
    }
  } else {
    throw std::invalid_argument("unknown method '" + method + "'");
  }

  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  report["timing_ms"] = elapsed.count();

  if (format == "json") {
    output.emit(report.dump(2) + "\n");
  } else if (format == "table") {
    output.emit(report.contains("lp_value") ? solve_table(inst, report) : report.dump(2) + "\n");
  } else {
    throw std::invalid_argument("solve supports --format json or table");
  }
  return kOk;
}

int cmd_check(const std::string& path, const std::string& mode, std::uint64_t seed) {
  const auto inst = load_instance(path);
  hn::CheckReport report;
  if (mode == "oracle") {
    report = hn::check_oracle(inst);
    report.absorb(hn::check_solution(inst, hn::solve_happy_nucleolus(inst)));
  } else if (mode == "symmetry") {
    report = hn::check_symmetry(inst);
  } else if (mode == "superset") {
    report = hn::check_superset(inst, seed);
  } else if (mode == "theorem3" || mode == "adversarial") {
    if (inst.n_players() > hn::oracle_capacity()) {
      throw hn::CapacityError("adversarial check supports at most " + std::to_string(hn::oracle_capacity()) +
                              " players");
    }
    report = hn::check_adversarial(inst);
  } else {
    throw std::invalid_argument("unknown mode '" + mode + "'");
  }
  std::cout << mode << ": " << report.summary() << '\n';
  return report.passed ? kOk : kCheckFailed;
}

int cmd_gen(const std::string& kind, std::size_t n, const std::vector<std::string>& costs, const std::string& spec_path,
            std::int64_t round_denom, std::uint64_t seed, std::size_t players, std::size_t sets, const Output& output) {
  hn::SetCoverInstance inst = [&] {
    if (kind == "chain") return hn::chain_instance(n);
    if (kind == "triangle") {
      if (costs.size() != 3) throw std::invalid_argument("triangle needs --costs c1 c2 c3");
      return hn::triangle_instance(hn::parse_rational(costs[0]), hn::parse_rational(costs[1]),
                                   hn::parse_rational(costs[2]));
    }
    if (kind == "vrp") {
      if (spec_path.empty()) throw std::invalid_argument("vrp needs --spec PATH");
      auto spec = hn::json::vrp_spec_from(hn::json::read_file(spec_path));
      if (round_denom > 0) spec.round_denom = round_denom;
      return hn::vrp_to_setcover(spec);
    }
    if (kind == "random") {
      hn::RandomSpec spec;
      spec.seed = seed;
      spec.n_players = players;
      spec.n_sets = sets;
      return hn::random_instance(spec);
    }
    throw std::invalid_argument("unknown generator '" + kind + "'");
  }();
  output.emit(hn::json::instance_to(inst).dump(2) + "\n");
  std::cerr << kind << ": " << inst.n_players() << " players, " << inst.n_sets() << " sets\n";
  return kOk;
}

int cmd_report(const std::string& path, const std::string& allocation_path, const std::string& family_choice,
               const Output& output) {
  const auto inst = load_instance(path);
  const auto y = hn::json::allocation_from(hn::json::read_file(allocation_path), inst);
  if (family_choice.empty()) {
    output.emit(hn::excess_table_csv(inst, hn::excess_table(inst, y)));
    return kOk;
  }
  const auto family = family_for(inst, family_choice);
  hn::check_family(inst, family);
  std::vector<hn::CoalitionExcess> rows;
  for (const auto& pair : family.pairs) {
    const auto& cost = inst.set(pair.set_index).cost;
    rows.push_back({pair.coalition, cost, hn::pair_excess(inst, y, pair)});
  }
  output.emit(hn::excess_table_csv(inst, rows));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Happy nucleolus of set covering games"};
  app.require_subcommand(1);

  std::string instance_path, allocation_path, family = "c-star", method = "mps", format = "json", out_path;
  std::string mode = "oracle", kind, spec_path;
  std::uint64_t seed = 1;
  std::int64_t round_denom = 0;
  std::size_t n = 4, players = 5, sets = 8;
  std::vector<std::string> costs;
  std::string report_family;

  auto* solve = app.add_subcommand("solve", "Compute the happy nucleolus of an instance");
  solve->add_option("instance", instance_path, "Instance JSON")->required();
  solve->add_option("--family", family, "c-star, c-star-star or custom:<path>");
  solve->add_option("--method", method, "mps, oracle (brute force) or unhappy (classical nucleolus)")
      ->check(CLI::IsMember({"mps", "oracle", "unhappy"}));
  solve->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  solve->add_option("--out", out_path, "Output file (default stdout)");

  auto* check = app.add_subcommand("check", "Run a property check; exit 4 on failure");
  check->add_option("instance", instance_path, "Instance JSON")->required();
  check->add_option("--mode", mode, "oracle, symmetry, superset or adversarial (alias theorem3)")
      ->check(CLI::IsMember({"oracle", "symmetry", "superset", "theorem3", "adversarial"}));
  check->add_option("--seed", seed, "Seed for sampled pairs");

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("kind", kind, "chain, triangle, vrp or random")
      ->required()
      ->check(CLI::IsMember({"chain", "triangle", "vrp", "random"}));
  gen->add_option("--n", n, "Chain length");
  gen->add_option("--costs", costs, "Triangle costs c1 c2 c3")->expected(3);
  gen->add_option("--spec", spec_path, "VRP spec JSON");
  gen->add_option("--round-denom", round_denom, "Distance rounding denominator (overrides the spec)");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--players", players, "Random instance players");
  gen->add_option("--sets", sets, "Random instance sets");
  gen->add_option("--out", out_path, "Output file (default stdout)");

  auto* report = app.add_subcommand("report", "Excess table of an allocation as CSV");
  report->add_option("instance", instance_path, "Instance JSON")->required();
  report->add_option("allocation", allocation_path, "Allocation JSON")->required();
  report->add_option("--family", report_family, "Restrict rows to c-star, c-star-star or custom:<path>");
  report->add_option("--format", format, "csv")->check(CLI::IsMember({"csv"}));
  report->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  const Output output{out_path};
  try {
    if (*solve) return cmd_solve(instance_path, family, method, format, output);
    if (*check) return cmd_check(instance_path, mode, seed);
    if (*gen) return cmd_gen(kind, n, costs, spec_path, round_denom, seed, players, sets, output);
    if (*report) return cmd_report(instance_path, allocation_path, report_family, output);
  } catch (const hn::CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << '\n';
    return kCapacity;
  } catch (const hn::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kUnsolvable;
  } catch (const hn::UnderdeterminedError& e) {
    std::cerr << "underdetermined: " << e.what() << '\n';
    return kUnsolvable;
  } catch (const hn::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const hn::Error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
