#include "doctest.h"

#include "hn/errors.hpp"
#include "hn/generators.hpp"
#include "hn/json_io.hpp"

using hn::Rational;
using hn::json::Json;

TEST_CASE("instances round-trip exactly") {
  const auto inst = hn::random_instance({6, 9, 3, 10, 7});
  const auto doc = hn::json::instance_to(inst);
  const auto back = hn::SetCoverInstance::build(hn::json::instance_data_from(Json::parse(doc.dump())));
  CHECK(back == inst);
}

TEST_CASE("decimal and numeric costs are read exactly") {
  const auto doc = Json::parse(R"({"players": ["a", "b"],
    "sets": [{"members": [0, 1], "cost": "1.5"}, {"members": [0], "cost": 2}, {"members": [1], "cost": 0.25}]})");
  const auto data = hn::json::instance_data_from(doc);
  CHECK(data.sets[0].cost == Rational(3, 2));
  CHECK(data.sets[1].cost == 2);
  CHECK(data.sets[2].cost == Rational(1, 4));
}

TEST_CASE("malformed documents raise parse errors") {
  CHECK_THROWS_AS(hn::json::instance_data_from(Json::parse(R"({"sets": []})")), hn::ParseError);
  CHECK_THROWS_AS(hn::json::instance_data_from(Json::parse(R"({"players": ["a"], "sets": [{"members": [-1], "cost": "1"}]})")),
                  hn::ParseError);
  CHECK_THROWS_AS(hn::json::rational_from(Json::parse("true")), hn::ParseError);
  CHECK_THROWS_AS(hn::json::read_file("/nonexistent/instance.json"), hn::ParseError);
}

TEST_CASE("allocations round-trip and accept solve reports") {
  const auto inst = hn::chain_instance(3);
  const hn::Allocation y({Rational(1, 2), Rational(3, 4), Rational(7, 4)});
  const auto doc = hn::json::allocation_to(inst, y);
  CHECK(doc["decimals"][2] == "1.75");
  CHECK(hn::json::allocation_from(doc, inst) == y);
  CHECK(hn::json::allocation_from(Json{{"allocation", doc}}, inst) == y);
  CHECK_THROWS_AS(hn::json::allocation_from(Json{{"values", {"1"}}}, inst), hn::ParseError);
}

TEST_CASE("families and stage logs") {
  const hn::PairFamily family{{{{0}, 0}, {{0, 1}, 1}}, hn::Provenance::custom};
  const auto doc = hn::json::family_to(family);
  CHECK(hn::json::family_from(doc).pairs == family.pairs);

  hn::MpsState state;
  state.stages.push_back({Rational(1, 2), {0, 8}});
  CHECK(hn::json::stages_to(state).dump() == R"([{"epsilon":"1/2","fixed":[0,8]}])");
}

TEST_CASE("VRP specs in both modes") {
  const auto graph = hn::json::vrp_spec_from(Json::parse(R"({"graph": {"edges": [["D", "a", 1], ["a", "b", 2]]},
    "depot": "D", "capacity": null})"));
  CHECK(graph.mode == hn::VrpSpec::Mode::graph);
  CHECK(graph.customers == std::vector<std::string>{"a", "b"});
  CHECK_FALSE(graph.capacity.has_value());

  const auto coords = hn::json::vrp_spec_from(Json::parse(R"({"coords": [[1, 2], ["1/2", 3]], "depot": [0, 0],
    "capacity": 2, "penalties": {"b": "4"}, "round_denom": 100})"));
  CHECK(coords.customers == std::vector<std::string>{"a", "b"});
  CHECK(coords.coords[1].x == Rational(1, 2));
  CHECK(coords.penalties.at("b") == 4);
  CHECK(coords.round_denom == 100);
  CHECK(hn::vrp_to_setcover(hn::json::vrp_spec_from(hn::json::vrp_spec_to(coords))) == hn::vrp_to_setcover(coords));

  CHECK_THROWS_AS(hn::json::vrp_spec_from(Json::parse(R"({"depot": [0, 0]})")), hn::ParseError);
}
