#pragma once

#include "hermite_kit/exact.hpp"
#include "hermite_kit/expansions.hpp"
#include "hermite_kit/moments.hpp"

#include <nlohmann/json.hpp>

namespace hermite_kit {

// ["3", "0", "-6", "0", "1"], constant term first.
nlohmann::json to_json(const ExactPolynomial& p);
// Accepts strings ("-7/4", "0.5") or integer numbers per coefficient.
ExactPolynomial polynomial_from_json(const nlohmann::json& j);

// Row-major arrays of rational strings.
nlohmann::json to_json(const ChangeOfBasisMatrix& m);

// {"convention": "DensityWeighted", "coeffs": [...]}
nlohmann::json to_json(const HermiteSeries& s);
HermiteSeries series_from_json(const nlohmann::json& j);

}  // namespace hermite_kit
