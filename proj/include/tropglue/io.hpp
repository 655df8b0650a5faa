#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tropglue/glue.hpp"

namespace tropglue::io {

using Json = nlohmann::json;

// One curve document: domain, points, vertices, edges, ends, unbounded.
// Rationals are "p/q" strings. The returned config has no table attached.
GluingConfig parse_curve(const Json& doc);
Json curve_to_json(const GluingConfig& config);

// A single curve object, an array of curves, or {"curves": [...]}.
std::vector<GluingConfig> parse_curves(const Json& doc);

// Entries {face, contacts: [{edge?, divisor, order}], n_points, coeff, energy}.
// Contacts sharing an "edge" index describe one incident edge (default 0).
// An entry may carry "terms": [{coeff, energy}] instead of a single coeff/energy.
VertexInvariantTable parse_table(const Json& doc);
Json table_to_json(const VertexInvariantTable& table);

Json energy_to_json(const EnergyVec& e);
EnergyVec parse_energy(const Json& j);
Json poly_to_json(const NovikovPoly& p);

// Parses text; throws Error(InvalidInput) with the parser message on malformed JSON.
Json parse_text(const std::string& text, const std::string& what);

// Reads and parses a JSON file; Error(InvalidInput) if it cannot be opened or parsed.
Json read_json_file(const std::string& path);

}  // namespace tropglue::io
