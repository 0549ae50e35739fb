#include "delwca/kripke.hpp"

#include <algorithm>

namespace delwca {

int EpistemicModel::index_of(const std::string& state) const {
  auto it = std::find(states.begin(), states.end(), state);
  return it == states.end() ? -1 : static_cast<int>(it - states.begin());
}

bool EpistemicModel::related(const AgentId& agent, int from, int to) const {
  auto it = relations.find(agent);
  return it != relations.end() && it->second.count({from, to}) > 0;
}

std::vector<int> EpistemicModel::successors(const AgentId& agent,
                                            int from) const {
  std::vector<int> out;
  auto it = relations.find(agent);
  if (it == relations.end()) return out;
  for (const auto& [x, y] : it->second) {
    if (x == from) out.push_back(y);
  }
  return out;
}

bool EpistemicModel::holds(const PropId& prop, int state) const {
  auto it = valuation.find(prop);
  return it != valuation.end() && it->second.count(state) > 0;
}

void EpistemicModel::add_state(std::string name) {
  states.push_back(std::move(name));
}

void EpistemicModel::add_edge(const AgentId& agent, int from, int to) {
  relations[agent].insert({from, to});
}

void EpistemicModel::add_fact(const PropId& prop, int state) {
  valuation[prop].insert(state);
}

bool eval_static(const PointedModel& m, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Top:
      return true;
    case Formula::Kind::Atom:
      return m.model.holds(f.prop(), m.point);
    case Formula::Kind::Not:
      return !eval_static(m, f.sub());
    case Formula::Kind::And:
      return eval_static(m, f.lhs()) && eval_static(m, f.rhs());
    case Formula::Kind::Knows: {
      for (int t : m.model.successors(f.agent(), m.point)) {
        if (!eval_static({m.model, t}, f.sub())) return false;
      }
      return true;
    }
    case Formula::Kind::Box:
      throw EvalError(
          "eval_static: formula contains a program modality; use the full "
          "evaluator");
  }
  return false;
}

bool is_s5(const EpistemicModel& m) {
  const int n = static_cast<int>(m.states.size());
  for (const auto& agent : m.agents) {
    auto it = m.relations.find(agent);
    const std::set<StatePair> empty;
    const auto& rel = it == m.relations.end() ? empty : it->second;
    for (int s = 0; s < n; ++s) {
      if (rel.count({s, s}) == 0) return false;
    }
    for (const auto& [x, y] : rel) {
      if (rel.count({y, x}) == 0) return false;
      for (const auto& [y2, z] : rel) {
        if (y2 == y && rel.count({x, z}) == 0) return false;
      }
    }
  }
  return true;
}

std::set<StatePair> equivalence_closure(std::set<StatePair> rel,
                                        int n_states) {
  for (int s = 0; s < n_states; ++s) rel.insert({s, s});
  bool changed = true;
  while (changed) {
    changed = false;
    std::set<StatePair> next = rel;
    for (const auto& [x, y] : rel) {
      if (next.insert({y, x}).second) changed = true;
      for (const auto& [y2, z] : rel) {
        if (y2 == y && next.insert({x, z}).second) changed = true;
      }
    }
    rel.swap(next);
  }
  return rel;
}

}  // namespace delwca
