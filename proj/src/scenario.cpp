#include "delwca/scenario.hpp"

#include <algorithm>

namespace delwca {

bool Scenario::has_agent(const AgentId& a) const {
  return std::find(agents.begin(), agents.end(), a) != agents.end();
}

bool Scenario::has_prop(const PropId& p) const {
  return std::find(props.begin(), props.end(), p) != props.end();
}

bool Scenario::has_channel(const ChannelId& c) const {
  return channels.count(c) > 0;
}

bool Scenario::has_action_model(const std::string& name) const {
  return action_models.count(name) > 0;
}

const Channel& Scenario::channel(const ChannelId& c) const {
  return channels.at(c);
}

ProcessTerm Scenario::parallel_program() const {
  std::vector<ProcessTerm::Branch> branches;
  branches.reserve(agents.size());
  for (const auto& agent : agents) {
    auto it = programs.find(agent);
    branches.push_back(
        {agent, it == programs.end() ? ProcessTerm::done() : it->second});
  }
  return ProcessTerm::parallel(std::move(branches));
}

PointedActionModel Scenario::resolve(const ActionRef& action) const {
  switch (action.kind()) {
    case ActionRef::Kind::Model: {
      auto it = action_models.find(action.name());
      if (it == action_models.end()) {
        throw EvalError("unknown action model: " + action.name());
      }
      return it->second;
    }
    case ActionRef::Kind::Tau:
      return tau_model(action.sender(), action.receiver(), action.payload(),
                       agents, tau_reflexive);
    case ActionRef::Kind::Embedded:
      return *action.value();
    case ActionRef::Kind::Input:
    case ActionRef::Kind::Output:
      throw EvalError(
          "bare channel action cannot be executed; it only synchronizes "
          "inside a parallel composition");
  }
  throw EvalError("unreachable action kind");
}

}  // namespace delwca
