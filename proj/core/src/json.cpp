#include "hermite_kit/json.hpp"

#include "hermite_kit/errors.hpp"

namespace hermite_kit {

nlohmann::json to_json(const ExactPolynomial& p) { return p.to_strings(); }

ExactPolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("polynomial must be a non-empty JSON array", 0);
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) {
    if (c.is_string()) {
      coeffs.push_back(parse_rational(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<long long>());
    } else {
      throw ParseError("polynomial coefficient must be a string or an integer", 0);
    }
  }
  return ExactPolynomial(std::move(coeffs));
}

nlohmann::json to_json(const ChangeOfBasisMatrix& m) { return m.to_strings(); }

nlohmann::json to_json(const HermiteSeries& s) {
  nlohmann::json j;
  j["convention"] = to_string(s.convention);
  j["coeffs"] = s.coeffs;
  if (s.range_warning) j["range_warning"] = true;
  return j;
}

HermiteSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("convention") || !j.contains("coeffs")) {
    throw ParseError("series must be an object with convention and coeffs", 0);
  }
  HermiteSeries s;
  try {
    s.convention = parse_convention(j.at("convention").get<std::string>());
    s.coeffs = j.at("coeffs").get<std::vector<double>>();
    s.range_warning = j.value("range_warning", false);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0);
  }
  return s;
}

}  // namespace hermite_kit
