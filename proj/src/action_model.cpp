#include "delwca/action_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace delwca {

int ActionModel::index_of(const std::string& point) const {
  auto it = std::find(points.begin(), points.end(), point);
  return it == points.end() ? -1 : static_cast<int>(it - points.begin());
}

bool ActionModel::related(const AgentId& agent, int from, int to) const {
  auto it = relations.find(agent);
  return it != relations.end() && it->second.count({from, to}) > 0;
}

std::optional<PointedModel> product_update(const PointedModel& m,
                                           const PointedActionModel& a,
                                           const PreEval& pre_holds) {
  const PreEval eval = pre_holds ? pre_holds
                                 : [](const PointedModel& pm, const Formula& f) {
                                     return eval_static(pm, f);
                                   };

  const int n_states = static_cast<int>(m.model.states.size());
  const int n_points = static_cast<int>(a.model.points.size());

  // Candidate pairs in source-major order; kept iff the precondition holds.
  std::vector<std::pair<int, int>> survivors;
  std::vector<std::vector<int>> pair_index(n_states,
                                           std::vector<int>(n_points, -1));
  for (int s = 0; s < n_states; ++s) {
    for (int e = 0; e < n_points; ++e) {
      if (eval({m.model, s}, a.model.pre[e])) {
        pair_index[s][e] = static_cast<int>(survivors.size());
        survivors.push_back({s, e});
      }
    }
  }

  if (pair_index[m.point][a.point] < 0) return std::nullopt;  // blocked

  EpistemicModel out;
  out.agents = m.model.agents;
  for (const auto& [s, e] : survivors) {
    out.add_state(m.model.state_name(s) + "·" + a.model.points[e]);
  }

  for (const auto& agent : out.agents) {
    auto mrel = m.model.relations.find(agent);
    auto arel = a.model.relations.find(agent);
    if (mrel == m.model.relations.end() || arel == a.model.relations.end()) {
      continue;
    }
    for (const auto& [s, t] : mrel->second) {
      for (const auto& [e, f] : arel->second) {
        int from = pair_index[s][e];
        int to = pair_index[t][f];
        if (from >= 0 && to >= 0) out.add_edge(agent, from, to);
      }
    }
  }

  for (const auto& [prop, holds_at] : m.model.valuation) {
    for (std::size_t i = 0; i < survivors.size(); ++i) {
      if (holds_at.count(survivors[i].first) > 0) {
        out.add_fact(prop, static_cast<int>(i));
      }
    }
  }

  return PointedModel{std::move(out), pair_index[m.point][a.point]};
}

PointedActionModel compose(const PointedActionModel& first,
                           const PointedActionModel& second) {
  const auto& a = first.model;
  const auto& b = second.model;
  ActionModel out;

  // Full point product; the designated point pairs the two designated points.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < static_cast<int>(a.points.size()); ++i) {
    for (int j = 0; j < static_cast<int>(b.points.size()); ++j) {
      pairs.push_back({i, j});
      out.points.push_back(a.points[i] + "·" + b.points[j]);
    }
  }
  auto index = [&](int i, int j) {
    return i * static_cast<int>(b.points.size()) + j;
  };

  std::set<AgentId> agents;
  for (const auto& [agent, rel] : a.relations) agents.insert(agent);
  for (const auto& [agent, rel] : b.relations) agents.insert(agent);
  for (const auto& agent : agents) {
    auto ar = a.relations.find(agent);
    auto br = b.relations.find(agent);
    if (ar == a.relations.end() || br == b.relations.end()) continue;
    for (const auto& [i, k] : ar->second) {
      for (const auto& [j, l] : br->second) {
        out.relations[agent].insert({index(i, j), index(k, l)});
      }
    }
  }

  auto first_shared = std::make_shared<const PointedActionModel>(first);
  for (const auto& [i, j] : pairs) {
    // pre(i, j) = <first@i> pre_second(j), stored unexpanded.
    PointedActionModel at_i = {a, i};
    out.pre.push_back(Formula::diamond(
        ProcessTerm::act(ActionRef::embedded(
            std::make_shared<const PointedActionModel>(at_i))),
        b.pre[j]));
  }

  return {std::move(out), index(first.point, second.point)};
}

PointedActionModel tau_model(const AgentId& sender, const AgentId& receiver,
                             const Formula& payload,
                             const std::vector<AgentId>& agents,
                             bool outsider_reflexive) {
  if (sender == receiver) {
    throw std::invalid_argument(
        "tau_model: sender and receiver must be distinct agents");
  }
  ActionModel m;
  m.points = {"s", "t"};
  m.pre = {payload, Formula::top()};
  for (const auto& agent : agents) {
    if (agent == sender || agent == receiver) {
      m.relations[agent] = {{0, 0}, {1, 1}};
    } else {
      m.relations[agent] = {{0, 1}, {1, 1}};
      if (outsider_reflexive) m.relations[agent].insert({0, 0});
    }
  }
  return {std::move(m), 0};
}

}  // namespace delwca
