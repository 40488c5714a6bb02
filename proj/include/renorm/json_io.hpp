#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "renorm/descent.hpp"
#include "renorm/linmap.hpp"
#include "renorm/renorm.hpp"

namespace renorm {

using Json = nlohmann::ordered_json;

/// {"floor": f, "cap": c, "coeffs": {"-2": "1/2", ...}}; an exact series has "cap": null.
Json series_to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const Json& j);

/// {"hopf": family, "truncation": N, "values": {tree-code: series}}; trees only.
Json linmap_to_json(const LinMap& f);
Json character_to_json(const Character& phi);

/// Reads a character. Values on trees above `truncation` (when given, the
/// file's own truncation otherwise) are dropped; forests with several trees are rejected.
Character character_from_json(const Json& j, std::optional<int> truncation = std::nullopt);

/// {"degree": n, "basis": "composition", "element": {"1,2": "-1", ...}}.
Json descent_to_json(const DescentElement& a, int degree);
DescentElement descent_from_json(const Json& j);

/// method is one of bogoliubov, zassenhaus, accelerated, all.
Json decomposition_report(const TheoremReport& report, const std::string& method);

/// Wraps nlohmann parse failures into ParseError.
Json parse_json(const std::string& text);

}  // namespace renorm
