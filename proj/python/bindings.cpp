#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hn/checks.hpp"
#include "hn/errors.hpp"
#include "hn/families.hpp"
#include "hn/generators.hpp"
#include "hn/json_io.hpp"
#include "hn/lp.hpp"
#include "hn/oracle.hpp"
#include "hn/solver.hpp"

namespace py = pybind11;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python layer turns them into Fractions.
std::vector<std::string> strings(const hn::Allocation& y) {
  std::vector<std::string> out;
  for (const auto& v : y.values()) out.push_back(hn::to_string(v));
  return out;
}

py::dict solve_report(const hn::SolveResult& result) {
  py::list stages;
  for (const auto& stage : result.state.stages) stages.append(py::make_tuple(hn::to_string(stage.epsilon), stage.fixed));
  py::list pairs;
  for (const auto& pair : result.family.pairs) pairs.append(py::make_tuple(pair.coalition, pair.set_index));
  py::dict out;
  out["values"] = strings(result.allocation);
  out["lp_value"] = hn::to_string(result.lp_value);
  out["stages"] = stages;
  out["pairs"] = pairs;
  return out;
}

hn::PairFamily family_from_pairs(const std::vector<std::pair<std::vector<std::size_t>, std::size_t>>& pairs) {
  hn::PairFamily family{{}, hn::Provenance::custom};
  for (const auto& [coalition, index] : pairs) family.pairs.push_back({hn::make_coalition(coalition), index});
  return family;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact happy nucleolus of set covering games";

  auto base = py::register_exception<hn::Error>(m, "HnError", PyExc_RuntimeError);
  py::register_exception<hn::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<hn::InstanceError>(m, "InstanceError", base.ptr());
  py::register_exception<hn::CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<hn::InfeasibleError>(m, "InfeasibleError", base.ptr());
  py::register_exception<hn::UnderdeterminedError>(m, "UnderdeterminedError", base.ptr());
  py::register_exception<hn::InternalError>(m, "InternalError", base.ptr());

  py::class_<hn::SetCoverInstance>(m, "Instance")
      .def_static(
          "from_json",
          [](const std::string& text) {
            return hn::SetCoverInstance::build(hn::json::instance_data_from(hn::json::Json::parse(text)));
          },
          py::arg("text"))
      .def_static(
          "load",
          [](const std::string& path) {
            return hn::SetCoverInstance::build(hn::json::instance_data_from(hn::json::read_file(path)));
          },
          py::arg("path"))
      .def("to_json", [](const hn::SetCoverInstance& inst) { return hn::json::instance_to(inst).dump(); })
      .def_property_readonly("n_players", &hn::SetCoverInstance::n_players)
      .def_property_readonly("n_sets", &hn::SetCoverInstance::n_sets)
      .def_property_readonly("labels", &hn::SetCoverInstance::labels)
      .def_property_readonly("sets",
                             [](const hn::SetCoverInstance& inst) {
                               py::list out;
                               for (const auto& s : inst.sets()) out.append(py::make_tuple(s.members, hn::to_string(s.cost)));
                               return out;
                             })
      .def("__eq__", [](const hn::SetCoverInstance& a, const hn::SetCoverInstance& b) { return a == b; })
      .def("__repr__", [](const hn::SetCoverInstance& inst) {
        return "<Instance players=" + std::to_string(inst.n_players()) + " sets=" + std::to_string(inst.n_sets()) + ">";
      });

  m.def("solve", [](const hn::SetCoverInstance& inst) { return solve_report(hn::solve_happy_nucleolus(inst)); },
        py::arg("instance"));
  m.def(
      "solve_with_pairs",
      [](const hn::SetCoverInstance& inst, const std::vector<std::pair<std::vector<std::size_t>, std::size_t>>& pairs) {
        return solve_report(hn::solve_with_family(inst, family_from_pairs(pairs)));
      },
      py::arg("instance"), py::arg("pairs"));
  m.def("fractional_cover_value", [](const hn::SetCoverInstance& inst) { return hn::to_string(hn::lp::fractional_cover_value(inst)); },
        py::arg("instance"));
  m.def("integral_cover_value", [](const hn::SetCoverInstance& inst) { return hn::to_string(hn::integral_cover_value(inst)); },
        py::arg("instance"));
  m.def("happy_nucleolus_bruteforce", [](const hn::SetCoverInstance& inst) { return strings(hn::happy_nucleolus_bruteforce(inst)); },
        py::arg("instance"));
  m.def("unhappy_nucleolus_bruteforce",
        [](const hn::SetCoverInstance& inst) { return strings(hn::unhappy_nucleolus_bruteforce(inst).allocation); },
        py::arg("instance"));
  m.def(
      "excess_table",
      [](const hn::SetCoverInstance& inst, const std::vector<std::string>& values) {
        std::vector<hn::Rational> y;
        for (const auto& v : values) y.push_back(hn::parse_rational(v));
        py::list out;
        for (const auto& row : hn::excess_table(inst, hn::Allocation(std::move(y)))) {
          out.append(py::make_tuple(row.coalition, hn::to_string(row.cover_cost), hn::to_string(row.excess)));
        }
        return out;
      },
      py::arg("instance"), py::arg("values"));
  m.def(
      "c_star",
      [](const hn::SetCoverInstance& inst) {
        py::list out;
        for (const auto& pair : hn::build_c_star(inst).pairs) out.append(py::make_tuple(pair.coalition, pair.set_index));
        return out;
      },
      py::arg("instance"));

  m.def("chain", &hn::chain_instance, py::arg("n"));
  m.def(
      "triangle",
      [](const std::string& c1, const std::string& c2, const std::string& c3) {
        return hn::triangle_instance(hn::parse_rational(c1), hn::parse_rational(c2), hn::parse_rational(c3));
      },
      py::arg("c1"), py::arg("c2"), py::arg("c3"));
  m.def(
      "vrp",
      [](const std::string& spec_json) {
        return hn::vrp_to_setcover(hn::json::vrp_spec_from(hn::json::Json::parse(spec_json)));
      },
      py::arg("spec_json"));
  m.def(
      "random_instance",
      [](std::size_t n_players, std::size_t n_sets, std::uint64_t seed) {
        return hn::random_instance({n_players, n_sets, seed, 10, 4});
      },
      py::arg("n_players"), py::arg("n_sets"), py::arg("seed"));

  m.def(
      "check",
      [](const hn::SetCoverInstance& inst, const std::string& mode, std::uint64_t seed) {
        hn::CheckReport report;
        if (mode == "oracle") {
          report = hn::check_oracle(inst);
        } else if (mode == "symmetry") {
          report = hn::check_symmetry(inst);
        } else if (mode == "superset") {
          report = hn::check_superset(inst, seed);
        } else if (mode == "theorem3" || mode == "adversarial") {
          report = hn::check_adversarial(inst);
        } else {
          throw py::value_error("unknown mode '" + mode + "'");
        }
        return py::make_tuple(report.passed, report.summary());
      },
      py::arg("instance"), py::arg("mode"), py::arg("seed") = 1);
}
