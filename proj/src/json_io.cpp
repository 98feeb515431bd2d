#include "hn/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hn/errors.hpp"

namespace hn::json {

namespace {

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::size_t index_from(const Json& value, const char* what) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  }
  return value.get<std::size_t>();
}

std::vector<std::string> labels_from(const Json& value) {
  if (!value.is_array()) throw ParseError("'players' must be an array of labels");
  std::vector<std::string> out;
  for (const auto& v : value) {
    if (!v.is_string()) throw ParseError("player labels must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::string default_label(std::size_t i, std::size_t n) {
  if (n <= 26) return std::string(1, static_cast<char>('a' + i));
  return "c" + std::to_string(i + 1);
}

VrpSpec::Point point_from(const Json& value) {
  if (!value.is_array() || value.size() != 2) throw ParseError("points are [x, y] pairs");
  return {rational_from(value[0]), rational_from(value[1])};
}

}  // namespace

Rational rational_from(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return parse_rational(value.dump());
  if (value.is_number_float()) return parse_rational(value.dump());
  throw ParseError("expected a rational, got " + value.dump());
}

Json rational_to(const Rational& value) { return to_string(value); }

InstanceData instance_data_from(const Json& doc) {
  InstanceData data;
  data.players = labels_from(field(doc, "players"));
  const auto& sets = field(doc, "sets");
  if (!sets.is_array()) throw ParseError("'sets' must be an array");
  for (const auto& s : sets) {
    CoverSet set;
    const auto& members = field(s, "members");
    if (!members.is_array()) throw ParseError("'members' must be an array");
    for (const auto& m : members) set.members.push_back(index_from(m, "set member"));
    set.cost = rational_from(field(s, "cost"));
    data.sets.push_back(std::move(set));
  }
  return data;
}

Json instance_to(const SetCoverInstance& inst) {
  Json sets = Json::array();
  for (const auto& set : inst.sets()) sets.push_back({{"members", set.members}, {"cost", rational_to(set.cost)}});
  return {{"players", inst.labels()}, {"sets", std::move(sets)}};
}

Allocation allocation_from(const Json& input, const SetCoverInstance& inst) {
  const Json& doc = input.is_object() && input.contains("allocation") ? input.at("allocation") : input;
  const auto& values = field(doc, "values");
  if (!values.is_array() || values.size() != inst.n_players()) {
    throw ParseError("'values' must list one entry per player");
  }
  if (doc.contains("players") && labels_from(doc.at("players")) != inst.labels()) {
    throw ParseError("allocation players do not match the instance");
  }
  std::vector<Rational> y;
  for (const auto& v : values) y.push_back(rational_from(v));
  for (const auto& v : y) {
    if (v < 0) throw ParseError("allocation entries must be nonnegative");
  }
  return Allocation(std::move(y));
}

Json allocation_to(const SetCoverInstance& inst, const Allocation& y) {
  Json values = Json::array(), decimals = Json::array();
  for (const auto& v : y.values()) {
    values.push_back(rational_to(v));
    decimals.push_back(to_decimal(v));
  }
  return {{"players", inst.labels()}, {"values", std::move(values)}, {"decimals", std::move(decimals)}};
}

PairFamily family_from(const Json& doc) {
  if (!doc.is_array()) throw ParseError("a family is an array of pairs");
  PairFamily family{{}, Provenance::custom};
  for (const auto& entry : doc) {
    SimplePair pair;
    for (const auto& p : field(entry, "coalition")) pair.coalition.push_back(index_from(p, "coalition member"));
    pair.coalition = make_coalition(std::move(pair.coalition));
    pair.set_index = index_from(field(entry, "set_index"), "set_index");
    family.pairs.push_back(std::move(pair));
  }
  return family;
}

Json family_to(const PairFamily& family) {
  Json out = Json::array();
  for (const auto& pair : family.pairs) out.push_back({{"coalition", pair.coalition}, {"set_index", pair.set_index}});
  return out;
}

Json stages_to(const MpsState& state) {
  Json out = Json::array();
  for (const auto& stage : state.stages) {
    out.push_back({{"epsilon", rational_to(stage.epsilon)}, {"fixed", stage.fixed}});
  }
  return out;
}

VrpSpec vrp_spec_from(const Json& doc) {
  if (!doc.is_object()) throw ParseError("a VRP spec is an object");
  VrpSpec spec;
  if (doc.contains("coords") == doc.contains("graph")) throw ParseError("give exactly one of 'coords' and 'graph'");

  if (doc.contains("coords")) {
    spec.mode = VrpSpec::Mode::coords;
    for (const auto& pt : doc.at("coords")) spec.coords.push_back(point_from(pt));
    spec.depot_point = point_from(field(doc, "depot"));
    if (doc.contains("customers")) {
      spec.customers = labels_from(doc.at("customers"));
    } else {
      for (std::size_t i = 0; i < spec.coords.size(); ++i) spec.customers.push_back(default_label(i, spec.coords.size()));
    }
  } else {
    spec.mode = VrpSpec::Mode::graph;
    const auto& depot = field(doc, "depot");
    if (!depot.is_string()) throw ParseError("graph depot must be a vertex name");
    spec.depot_vertex = depot.get<std::string>();
    std::set<std::string> vertices;
    for (const auto& e : field(doc.at("graph"), "edges")) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string()) {
        throw ParseError("edges are [from, to, weight] triples");
      }
      spec.edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(), rational_from(e[2])});
      vertices.insert(spec.edges.back().from);
      vertices.insert(spec.edges.back().to);
    }
    if (doc.contains("customers")) {
      spec.customers = labels_from(doc.at("customers"));
    } else {
      vertices.erase(spec.depot_vertex);
      spec.customers.assign(vertices.begin(), vertices.end());
    }
  }

  if (doc.contains("capacity") && !doc.at("capacity").is_null()) {
    spec.capacity = index_from(doc.at("capacity"), "capacity");
  }
  if (doc.contains("penalties") && !doc.at("penalties").is_null()) {
    const auto& penalties = doc.at("penalties");
    if (!penalties.is_object()) throw ParseError("'penalties' maps customer labels to costs");
    for (const auto& [label, value] : penalties.items()) spec.penalties[label] = rational_from(value);
  }
  if (doc.contains("round_denom")) {
    const auto& d = doc.at("round_denom");
    if (!d.is_number_integer() || d.get<std::int64_t>() < 1) throw ParseError("'round_denom' must be a positive integer");
    spec.round_denom = d.get<std::int64_t>();
  }
  return spec;
}

Json vrp_spec_to(const VrpSpec& spec) {
  Json doc;
  doc["customers"] = spec.customers;
  if (spec.mode == VrpSpec::Mode::coords) {
    Json coords = Json::array();
    for (const auto& p : spec.coords) coords.push_back({rational_to(p.x), rational_to(p.y)});
    doc["coords"] = std::move(coords);
    doc["depot"] = {rational_to(spec.depot_point.x), rational_to(spec.depot_point.y)};
  } else {
    Json edges = Json::array();
    for (const auto& e : spec.edges) edges.push_back({e.from, e.to, rational_to(e.weight)});
    doc["graph"] = {{"edges", std::move(edges)}};
    doc["depot"] = spec.depot_vertex;
  }
  doc["capacity"] = spec.capacity ? Json(*spec.capacity) : Json(nullptr);
  Json penalties = Json::object();
  for (const auto& [label, value] : spec.penalties) penalties[label] = rational_to(value);
  doc["penalties"] = spec.penalties.empty() ? Json(nullptr) : std::move(penalties);
  doc["round_denom"] = spec.round_denom;
  return doc;
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << doc.dump(2) << '\n';
}

}  // namespace hn::json
