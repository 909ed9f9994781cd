#pragma once

#include <string>

#include <json.hpp>

#include "cyclemass/blowup.hpp"
#include "cyclemass/bounds.hpp"
#include "cyclemass/monte_carlo.hpp"
#include "cyclemass/optimizer.hpp"

namespace cyclemass {

/// Floats print with 12 significant digits everywhere ("%.12g").
std::string format_double(double v);

nlohmann::json mass_to_json(const FloatMass& mu);
nlohmann::json mass_to_json(const ExactMass& mu);

nlohmann::json to_json(const AscentReport& r);
nlohmann::json to_json(const SearchReport& r);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const McReport& r, double target);
nlohmann::json to_json(const LeadingTermResult<Rational>& r);

/// Line-oriented record formats, one "key value" or table row per line.
std::string to_text(const AscentReport& r);
std::string to_text(const SearchReport& r);
std::string to_text(const BoundReport& r);
std::string to_text(const McReport& r, double target);
std::string to_text(const LeadingTermResult<Rational>& r);

} // namespace cyclemass
