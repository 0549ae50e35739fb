#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "delwca/action_model.hpp"
#include "delwca/ast.hpp"
#include "delwca/kripke.hpp"
#include "delwca/scenario.hpp"

// Seeded random inputs: small scenarios (model, action models, channels),
// eta terms, parallel compositions and formulas. Drives the CLI selftest
// and the property tests.

namespace delwca::gen {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int range(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(rng_) < p; }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(range(0, static_cast<int>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 rng_;
};

// A literal usable as a payload or precondition.
inline Formula random_literal(Gen& g, const Scenario& sc) {
  if (sc.props.empty() || g.chance(0.15)) return Formula::top();
  Formula a = Formula::atom(g.pick(sc.props));
  return g.chance(0.4) ? Formula::negation(a) : a;
}

// A scenario with 2-4 agents, a small model, named action models with
// literal preconditions (relations not necessarily reflexive), and one
// channel in each direction between the first two agents.
inline Scenario random_context(Gen& g) {
  Scenario sc;
  int n_agents = g.range(2, 4);
  const std::vector<AgentId> pool{"a", "b", "c", "d"};
  for (int i = 0; i < n_agents; ++i) sc.agents.push_back(pool[i]);
  sc.props = {"p", "q"};

  EpistemicModel& m = sc.model.model;
  m.agents = sc.agents;
  int n_states = g.range(2, 3);
  for (int s = 0; s < n_states; ++s) m.states.push_back("s" + std::to_string(s));
  for (const PropId& p : sc.props)
    for (int s = 0; s < n_states; ++s)
      if (g.chance(0.5)) m.valuation[p].insert(s);
  for (const AgentId& a : sc.agents) {
    std::set<StatePair> rel;
    for (int x = 0; x < n_states; ++x)
      for (int y = 0; y < n_states; ++y)
        if (g.chance(0.4)) rel.insert({x, y});
    if (g.chance(0.5)) rel = equivalence_closure(rel, n_states);
    m.relations[a] = rel;
  }
  sc.model.point = g.range(0, n_states - 1);

  int n_models = g.range(1, 2);
  for (int k = 0; k < n_models; ++k) {
    ActionModel am;
    int n_points = g.range(1, 2);
    for (int e = 0; e < n_points; ++e) {
      am.points.push_back("e" + std::to_string(e));
      am.pre.push_back(random_literal(g, sc));
    }
    for (const AgentId& a : sc.agents) {
      std::set<StatePair> rel;
      for (int x = 0; x < n_points; ++x)
        for (int y = 0; y < n_points; ++y)
          if (g.chance(0.5)) rel.insert({x, y});
      am.relations[a] = rel;
    }
    sc.action_models.emplace("m" + std::to_string(k + 1),
                             PointedActionModel{std::move(am), g.range(0, n_points - 1)});
  }

  sc.channels["cab"] = Channel{"cab", sc.agents[0], sc.agents[1]};
  sc.channels["cba"] = Channel{"cba", sc.agents[1], sc.agents[0]};
  return sc;
}

inline ActionRef random_action(Gen& g, const Scenario& sc) {
  switch (g.range(0, 4)) {
    case 0:
    case 1: {
      std::vector<std::string> names;
      for (const auto& [name, am] : sc.action_models) names.push_back(name);
      return ActionRef::model(g.pick(names));
    }
    case 2: {
      std::vector<ChannelId> names;
      for (const auto& [name, ch] : sc.channels) names.push_back(name);
      return ActionRef::input(g.pick(names));
    }
    case 3: {
      std::vector<ChannelId> names;
      for (const auto& [name, ch] : sc.channels) names.push_back(name);
      return ActionRef::output(g.pick(names), random_literal(g, sc));
    }
    default:
      return ActionRef::tau(sc.agents[0], sc.agents[1], random_literal(g, sc));
  }
}

// An eta term (no parallel) of at most `size` constructors.
inline ProcessTerm random_eta(Gen& g, const Scenario& sc, int size) {
  if (size <= 1) {
    switch (g.range(0, 3)) {
      case 0:
        return ProcessTerm::nil();
      case 1:
        return ProcessTerm::done();
      default:
        return ProcessTerm::act(random_action(g, sc));
    }
  }
  switch (g.range(0, 3)) {
    case 0:
      return ProcessTerm::prefix(random_action(g, sc), random_eta(g, sc, size - 1));
    case 1: {
      int l = g.range(1, size - 1);
      return ProcessTerm::seq(random_eta(g, sc, l), random_eta(g, sc, size - l));
    }
    case 2: {
      int l = g.range(1, size - 1);
      return ProcessTerm::choice(random_eta(g, sc, l), random_eta(g, sc, size - l));
    }
    default:
      return ProcessTerm::act(random_action(g, sc));
  }
}

// A parallel composition with one branch per agent, total size <= `size`.
inline ProcessTerm random_parallel(Gen& g, const Scenario& sc, int size) {
  std::vector<ProcessTerm::Branch> branches;
  int n = static_cast<int>(sc.agents.size());
  for (int i = 0; i < n; ++i) {
    if (g.chance(0.2)) {
      branches.emplace_back(sc.agents[i], ProcessTerm::done());
    } else {
      branches.emplace_back(sc.agents[i], random_eta(g, sc, std::max(1, size / n)));
    }
  }
  return ProcessTerm::parallel(std::move(branches));
}

inline ProcessTerm random_program(Gen& g, const Scenario& sc, int size) {
  if (g.chance(0.3)) return random_parallel(g, sc, size);
  return random_eta(g, sc, size);
}

inline Formula random_formula(Gen& g, const Scenario& sc, int depth) {
  if (depth <= 0) {
    switch (g.range(0, 2)) {
      case 0:
        return Formula::top();
      default:
        return Formula::atom(g.pick(sc.props));
    }
  }
  switch (g.range(0, 5)) {
    case 0:
      return Formula::atom(g.pick(sc.props));
    case 1:
      return Formula::negation(random_formula(g, sc, depth - 1));
    case 2:
      return Formula::conjunction(random_formula(g, sc, depth - 1),
                                  random_formula(g, sc, depth - 1));
    case 3:
      return Formula::knows(g.pick(sc.agents), random_formula(g, sc, depth - 1));
    default:
      return Formula::box(random_program(g, sc, g.range(1, 5)),
                          random_formula(g, sc, depth - 1));
  }
}

}  // namespace delwca::gen
