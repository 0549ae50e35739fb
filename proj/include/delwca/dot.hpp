#pragma once

#include <string>

#include "delwca/action_model.hpp"
#include "delwca/kripke.hpp"
#include "delwca/scenario.hpp"

namespace delwca {

// Graphviz exports. `point` (a state/point index, or -1) gets a double
// border. Edges are colored per agent.
std::string to_dot(const EpistemicModel& m, int point = -1);
std::string to_dot(const ActionModel& a, int point = -1);

// The reachable transition graph of a term: nodes are rendered terms, edges
// are labelled with the action that moves between them.
std::string run_tree_dot(const ProcessTerm& t, const Scenario& sc);

}  // namespace delwca
