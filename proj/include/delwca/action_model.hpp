#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "delwca/ast.hpp"
#include "delwca/kripke.hpp"

// Action models: event points with preconditions and per-agent relations.
// Relations are arbitrary (not required to be equivalences); the private
// communication models built by tau_model are the prime example.

namespace delwca {

struct ActionModel {
  std::vector<std::string> points;                   // declaration order
  std::map<AgentId, std::set<StatePair>> relations;  // by point index
  std::vector<Formula> pre;                          // one per point

  int index_of(const std::string& point) const;
  bool related(const AgentId& agent, int from, int to) const;
};

struct PointedActionModel {
  ActionModel model;
  int point = 0;

  const std::string& point_name() const { return model.points.at(point); }
  const Formula& pre() const { return model.pre.at(point); }
  PointedActionModel at(int other_point) const { return {model, other_point}; }
};

// Precondition oracle used by product_update. The default handles program-free
// preconditions only; the semantics layer injects its full evaluator so that
// composed models (whose preconditions contain diamonds) also work.
using PreEval = std::function<bool(const PointedModel&, const Formula&)>;

// Product update of a pointed model with a pointed action model. Returns
// nullopt when the designated pair fails its precondition (a blocked update,
// which is a regular outcome, not an error). Product states are named
// "source·event" so repeated updates flatten left-associatively.
std::optional<PointedModel> product_update(const PointedModel& m,
                                           const PointedActionModel& a,
                                           const PreEval& pre_holds = {});

// Sequential composition of two pointed action models. The composed
// precondition of (s, s') is kept symbolic: <<M,s>> pre'(s'), a diamond over
// the first model embedded as a literal program.
PointedActionModel compose(const PointedActionModel& first,
                           const PointedActionModel& second);

// Private announcement of `payload` from `sender` to `receiver`: two events
// s (the real one, precondition = payload) and t (skip, precondition = true).
// Insiders tell s and t apart; every other agent confuses s with t and, when
// `outsider_reflexive` is false (the default), lacks the (s, s) loop.
PointedActionModel tau_model(const AgentId& sender, const AgentId& receiver,
                             const Formula& payload,
                             const std::vector<AgentId>& agents,
                             bool outsider_reflexive = false);

}  // namespace delwca
