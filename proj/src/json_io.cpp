#include "renorm/json_io.hpp"

#include "renorm/errors.hpp"

namespace renorm {

namespace {

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rational must be a string \"p/q\" or an integer");
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

int exponent_from_key(const std::string& key) {
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != key.size()) throw ParseError("bad exponent key '" + key + "'");
  return k;
}

Json factor_list(const ExpFactorization& fact, int truncation) {
  Json out = Json::array();
  for (int k = 1; k <= fact.levels(); ++k) {
    const auto [lo, hi] = fact.level_degrees(k, truncation);
    out.push_back(Json{{"level", k},
                       {"degrees", Json::array({lo, hi})},
                       {"minus", linmap_to_json(fact.minus[static_cast<std::size_t>(k - 1)].map())},
                       {"plus", linmap_to_json(fact.plus[static_cast<std::size_t>(k - 1)].map())}});
  }
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json series_to_json(const LaurentSeries& s) {
  Json coeffs = Json::object();
  for (const auto& [k, c] : s.terms()) coeffs[std::to_string(k)] = rational_to_json(c);
  Json j;
  j["floor"] = s.floor();
  j["cap"] = s.is_exact() ? Json(nullptr) : Json(s.cap());
  j["coeffs"] = std::move(coeffs);
  return j;
}

LaurentSeries series_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("series must be a JSON object");
  std::map<int, Rational> coeffs;
  if (auto it = j.find("coeffs"); it != j.end()) {
    if (!it->is_object()) throw ParseError("\"coeffs\" must be an object");
    for (const auto& [key, value] : it->items()) {
      Rational c = rational_from_json(value);
      if (c != 0) coeffs[exponent_from_key(key)] = c;
    }
  }
  int cap = LaurentSeries::kExact;
  if (auto it = j.find("cap"); it != j.end() && !it->is_null()) cap = int_from_json(*it, "cap");
  int floor = coeffs.empty() ? 0 : std::min(0, coeffs.begin()->first);
  if (auto it = j.find("floor"); it != j.end()) floor = int_from_json(*it, "floor");
  if (!coeffs.empty() && coeffs.begin()->first < floor) throw ParseError("coefficient below the floor");
  if (!coeffs.empty() && coeffs.rbegin()->first >= cap) throw ParseError("coefficient at or above the cap");
  return LaurentSeries(std::move(coeffs), std::min(floor, cap), cap);
}

Json linmap_to_json(const LinMap& f) {
  const HopfBasis& basis = *f.basis();
  Json values = Json::object();
  for (BasisIndex i : basis.tree_indices()) {
    if (!f.value(i).is_zero()) values[basis.forest(i).code()] = series_to_json(f.value(i));
  }
  return Json{{"hopf", to_string(basis.family())}, {"truncation", basis.max_degree()}, {"values", std::move(values)}};
}

Json character_to_json(const Character& phi) { return linmap_to_json(phi.map()); }

Character character_from_json(const Json& j, std::optional<int> truncation) {
  if (!j.is_object()) throw ParseError("character must be a JSON object");
  if (!j.contains("hopf") || !j["hopf"].is_string()) throw ParseError("character needs a \"hopf\" string");
  const TreeFamily family = parse_family(j["hopf"].get<std::string>());
  int n = 0;
  if (truncation) {
    n = *truncation;
  } else if (j.contains("truncation")) {
    n = int_from_json(j["truncation"], "truncation");
  } else {
    throw ParseError("character needs a \"truncation\"");
  }
  const BasisPtr basis = HopfBasis::get(family, n);
  std::map<RootedTree, LaurentSeries> values;
  if (auto it = j.find("values"); it != j.end()) {
    if (!it->is_object()) throw ParseError("\"values\" must be an object");
    for (const auto& [code, value] : it->items()) {
      const Forest f = Forest::parse(code);
      if (!f.is_tree()) throw ParseError("value given on '" + code + "', which is not a single tree");
      const RootedTree& t = f.trees().front();
      if (family == TreeFamily::Ladders && !t.is_ladder()) throw ParseError("'" + code + "' is not a ladder");
      if (t.degree() > n) continue;
      values.emplace(t, series_from_json(value));
    }
  }
  return Character::from_tree_values(basis, values);
}

Json descent_to_json(const DescentElement& a, int degree) {
  Json element = Json::object();
  for (const auto& [c, x] : a.terms()) element[c.code()] = rational_to_json(x);
  return Json{{"degree", degree}, {"basis", "composition"}, {"element", std::move(element)}};
}

DescentElement descent_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("element") || !j["element"].is_object()) {
    throw ParseError("descent element needs an \"element\" object");
  }
  if (j.contains("basis") && j["basis"] != "composition") throw ParseError("only the composition basis is supported");
  DescentElement a;
  for (const auto& [code, value] : j["element"].items()) a.add(Composition::parse(code), rational_from_json(value));
  if (j.contains("degree")) {
    const int n = int_from_json(j["degree"], "degree");
    for (const auto& [c, x] : a.terms()) {
      if (c.weight() != n) throw ParseError("composition " + c.code() + " does not have weight " + std::to_string(n));
    }
  }
  return a;
}

Json decomposition_report(const TheoremReport& report, const std::string& method) {
  const int n = report.bogoliubov.phi_minus.truncation();
  Json j;
  j["method"] = method;
  if (method == "zassenhaus") {
    j["phi_minus"] = character_to_json(report.plain_minus);
    j["phi_plus"] = character_to_json(report.plain_plus);
  } else if (method == "accelerated") {
    j["phi_minus"] = character_to_json(report.accelerated_minus);
    j["phi_plus"] = character_to_json(report.accelerated_plus);
  } else {
    j["phi_minus"] = character_to_json(report.bogoliubov.phi_minus);
    j["phi_plus"] = character_to_json(report.bogoliubov.phi_plus);
  }
  Json factors = Json::array();
  if (method == "zassenhaus" || method == "all") {
    factors.push_back(Json{{"mode", "plain"}, {"levels", factor_list(report.plain, n)}});
  }
  if (method == "accelerated" || method == "all") {
    factors.push_back(Json{{"mode", "accelerated"}, {"levels", factor_list(report.accelerated, n)}});
  }
  j["factors"] = std::move(factors);
  j["agreement"] = report.agreement;
  j["first_mismatch"] = report.first_mismatch ? Json(*report.first_mismatch) : Json(nullptr);
  return j;
}

}  // namespace renorm
