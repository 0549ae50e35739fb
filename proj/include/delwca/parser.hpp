#pragma once

#include <stdexcept>
#include <string>

#include "delwca/ast.hpp"
#include "delwca/scenario.hpp"

namespace delwca {

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(const std::string& msg, int line, int col);
};

// Parse a formula or program against an existing scenario's declarations.
// All identifiers are resolved eagerly; unknown names raise ParseError.
Formula parse_formula(const std::string& text, const Scenario& sc);
ProcessTerm parse_program(const std::string& text, const Scenario& sc);

// Parse a full scenario description (see docs/scenario-format.md).
Scenario parse_scenario(const std::string& text);
Scenario parse_scenario_file(const std::string& path);

}  // namespace delwca
