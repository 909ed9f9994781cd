#pragma once

#include <iosfwd>
#include <string>

#include "cyclemass/edge_mass.hpp"

namespace cyclemass {

/// Mass file format: header "n m", then m lines "u v p" with p a decimal or
/// "num/den" rational. Malformed text -> parse_error with the line number;
/// invariant violations (bad sum, duplicate edge, range) -> data_error.
ExactMass read_mass(std::istream& in);
ExactMass read_mass_file(const std::string& path);

void write_mass(std::ostream& out, const ExactMass& mu);
void write_mass_file(const std::string& path, const ExactMass& mu);

} // namespace cyclemass
