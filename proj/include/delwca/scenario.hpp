#pragma once

#include <map>
#include <string>
#include <vector>

#include "delwca/action_model.hpp"
#include "delwca/ast.hpp"
#include "delwca/kripke.hpp"

// A scenario bundles everything a query needs: the initial pointed model,
// named action models, directed channels, one process per agent and the
// queries themselves. It doubles as the symbol table for the parsers.

namespace delwca {

struct Scenario {
  std::vector<AgentId> agents;
  std::vector<PropId> props;
  PointedModel model;
  std::map<std::string, PointedActionModel> action_models;
  std::map<ChannelId, Channel> channels;
  std::map<AgentId, ProcessTerm> programs;
  std::vector<Formula> queries;

  // Runtime option: give outsiders the (s, s) loop in communication models.
  bool tau_reflexive = false;

  bool has_agent(const AgentId& a) const;
  bool has_prop(const PropId& p) const;
  bool has_channel(const ChannelId& c) const;
  bool has_action_model(const std::string& name) const;
  const Channel& channel(const ChannelId& c) const;

  // The parallel composition of all agent programs, one branch per agent in
  // declaration order; agents without a program idle (Done).
  ProcessTerm parallel_program() const;

  // Resolve an action label to a pointed action model. Throws EvalError for
  // bare channel endpoints, which denote synchronization halves, not updates.
  PointedActionModel resolve(const ActionRef& action) const;
};

}  // namespace delwca
