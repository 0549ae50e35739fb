#pragma once

#include <string>

#include "delwca/scenario.hpp"

namespace delwca {

// A parametric benchmark family: teacher t holds a secret p and tells each
// of n students over a private channel, choosing any order. The parallel
// composition has exactly n! runs, one per send order, and after every run
// all students know p.
std::string students_scenario_text(int n);
Scenario students_scenario(int n);

}  // namespace delwca
