#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "delwca/ast.hpp"

// Multi-agent epistemic (Kripke) models. States, relations and valuations keep
// declaration order throughout so every derived artifact (products, DOT dumps,
// CLI output) is deterministic.

namespace delwca {

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using StatePair = std::pair<int, int>;

struct EpistemicModel {
  std::vector<std::string> states;                       // declaration order
  std::vector<AgentId> agents;                           // declaration order
  std::map<AgentId, std::set<StatePair>> relations;      // by state index
  std::map<PropId, std::set<int>> valuation;             // prop -> states

  int index_of(const std::string& state) const;          // -1 when absent
  const std::string& state_name(int index) const { return states.at(index); }
  bool related(const AgentId& agent, int from, int to) const;
  std::vector<int> successors(const AgentId& agent, int from) const;
  bool holds(const PropId& prop, int state) const;

  void add_state(std::string name);
  void add_edge(const AgentId& agent, int from, int to);
  void add_fact(const PropId& prop, int state);
};

struct PointedModel {
  EpistemicModel model;
  int point = 0;

  const std::string& point_name() const { return model.state_name(point); }
};

// Satisfaction for program-free formulas. Throws EvalError on Box.
bool eval_static(const PointedModel& m, const Formula& f);

// True when every agent's relation is an equivalence over the full state set.
bool is_s5(const EpistemicModel& m);

// Reflexive-symmetric-transitive closure of one relation, used when a
// scenario is flagged s5 and edges were written in shorthand.
std::set<StatePair> equivalence_closure(std::set<StatePair> rel, int n_states);

}  // namespace delwca
