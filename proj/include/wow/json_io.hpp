#ifndef WOW_JSON_IO_HPP
#define WOW_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "wow/convex.hpp"
#include "wow/lagrangian.hpp"
#include "wow/lggrm.hpp"
#include "wow/nested.hpp"

namespace wow {

using json = nlohmann::json;

// {"points": [[..],..], "weights": [..]}
json to_json(const DiscreteMeasure& mu);
DiscreteMeasure measure_from_json(const json& j);

// {"pairs": [[[..],[..]],..], "weights": [..]}
json to_json(const Coupling& gamma);
Coupling coupling_from_json(const json& j);

// {"atoms": [<measure>...], "weights": [...]}
json to_json(const RandomLaw& m);
RandomLaw law_from_json(const json& j);

// {"atoms": [<coupling>...], "weights": [...]}
json to_json(const RandomCouplingLaw& p);
RandomCouplingLaw random_coupling_from_json(const json& j);

// {"n": n, "values": [[..],..]}
json to_json(const LagrangianMap& x);
LagrangianMap lagrangian_from_json(const json& j);

// {"grid": [<measure>...], "values": [...]}
json grid_table_to_json(const FunctionalSpec& phi);
FunctionalSpec grid_table_from_json(const json& j);

// functional specs by name + parameters:
// {"kind": "quadratic" | "norm" | "linear" | "half_sq_dist" | "dist"
//         | "max_pairing" | "grid_table",
//  "c": [..] (linear), "nu": <measure> (max_pairing),
//  "grid": [...], "values": [...] (grid_table)}
FunctionalSpec functional_from_json(const json& j);

// sampler spec; see README for the schema
json to_json(const GaussianSpec& spec);
GaussianSpec gaussian_spec_from_json(const json& j);

json to_json(const RegularityReport& rep);

/// Parse with parse errors mapped onto ErrorCode::parse_error.
json parse_json(const std::string& text);
json load_json_file(const std::string& path);

}  // namespace wow

#endif
