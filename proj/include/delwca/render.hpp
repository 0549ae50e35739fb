#pragma once

#include <string>

#include "delwca/ast.hpp"

// Concrete-syntax printers. Output reparses to the same AST (sugar is
// normalized at construction time, so only core constructors are printed).

namespace delwca {

std::string render(const Formula& f);
std::string render(const ProcessTerm& t);
std::string render(const ActionRef& a);

}  // namespace delwca
