#pragma once

#include <iosfwd>
#include <string_view>

#include "json.hpp"
#include "sigdef/correlation.hpp"
#include "sigdef/signaling.hpp"
#include "sigdef/simulate.hpp"

namespace sigdef {

/// Rounds to the given number of significant decimal digits.
double round_significant(double value, int digits = 12);

/// {"p": [[[[...]]]]} indexed [a][b][x][y]. Throws ParseError on shape errors,
/// then the make_correlation() errors on invalid probabilities.
Correlation correlation_from_json(const nlohmann::json& j);
Correlation parse_correlation(std::string_view text);
Correlation read_correlation(std::istream& in);

nlohmann::json to_json(const Correlation& p);
nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const Decomposition& d);
nlohmann::json to_json(const SignalReport& r);
nlohmann::json to_json(const RandomnessReport& r);

}  // namespace sigdef
