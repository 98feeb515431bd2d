#pragma once

#include <string>

#include "json.hpp"

#include "hn/families.hpp"
#include "hn/generators.hpp"
#include "hn/instance.hpp"
#include "hn/mps.hpp"
#include "hn/rational.hpp"

// JSON encodings. Rationals are written as "p/q" strings and read from "p/q",
// decimal strings, or JSON numbers. Malformed input throws ParseError.
namespace hn::json {

using Json = nlohmann::ordered_json;

Rational rational_from(const Json& value);
Json rational_to(const Rational& value);

/// {"players": [labels], "sets": [{"members": [indices], "cost": "p/q"}]}
InstanceData instance_data_from(const Json& doc);
Json instance_to(const SetCoverInstance& inst);

/// {"players": [labels], "values": ["p/q"], "decimals": ["1.5"]}; "decimals"
/// is ignored on input. A solve report is accepted through its "allocation".
Allocation allocation_from(const Json& doc, const SetCoverInstance& inst);
Json allocation_to(const SetCoverInstance& inst, const Allocation& y);

/// [{"coalition": [indices], "set_index": i}]
PairFamily family_from(const Json& doc);
Json family_to(const PairFamily& family);

/// [{"epsilon": "p/q", "fixed": [handles]}]
Json stages_to(const MpsState& state);

/// {"coords": [[x, y]], "depot": [x, y]} or {"graph": {"edges": [[u, v, w]]},
/// "depot": "D"}, plus optional "customers", "capacity", "penalties",
/// "round_denom".
VrpSpec vrp_spec_from(const Json& doc);
Json vrp_spec_to(const VrpSpec& spec);

Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& doc);

}  // namespace hn::json
