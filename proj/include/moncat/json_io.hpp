#pragma once

#include <json.hpp>

#include "moncat/monotone.hpp"
#include "moncat/multirel.hpp"
#include "moncat/strategy.hpp"

namespace moncat {

// JSON shapes:
//   monotone map   {"m": 2, "n": 1, "table": [0, 0]}
//   multirelation  {"m": 1, "n": 2, "rows": [[3, 0]]}
//   relation       {"m": 1, "n": 2, "rows": [[1, 0]]}         (entries 0 or 1)
//   strategy       {"source": ["O"], "target": ["O"],
//                   "links": [["L0", "R0"]]}                   (directed pairs)
// Strategy boundary letters O and P name opponent and proponent moves of a
// total order; links are sorted. Readers throw ParseError on malformed input.

nlohmann::json monotone_to_json(const MonotoneMap& f);
MonotoneMap monotone_from_json(const nlohmann::json& j);

nlohmann::json multirel_to_json(const Multirelation& r);
Multirelation multirel_from_json(const nlohmann::json& j);

nlohmann::json rel_to_json(const Relation& r);
Relation rel_from_json(const nlohmann::json& j);

nlohmann::json strategy_to_json(const Strategy& s);
Strategy strategy_from_json(const nlohmann::json& j);

} // namespace moncat
