#include "delwca/dot.hpp"

#include <map>
#include <sstream>
#include <unordered_map>

#include "delwca/process.hpp"
#include "delwca/render.hpp"

namespace delwca {
namespace {

const char* kPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string agent_color(const std::vector<AgentId>& agents, const AgentId& a) {
  for (size_t i = 0; i < agents.size(); ++i)
    if (agents[i] == a) return kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
  return "black";
}

}  // namespace

std::string to_dot(const EpistemicModel& m, int point) {
  std::ostringstream os;
  os << "digraph model {\n  rankdir=LR;\n  node [shape=ellipse];\n";
  for (size_t s = 0; s < m.states.size(); ++s) {
    std::string label = escape(m.states[s]);
    std::string props;
    for (const auto& [p, where] : m.valuation)
      if (where.count(static_cast<int>(s))) props += (props.empty() ? "" : " ") + p;
    // "\n" is a graphviz escape, so it must stay out of escape()'s way.
    if (!props.empty()) label += "\\n" + escape(props);
    os << "  \"" << escape(m.states[s]) << "\" [label=\"" << label << "\"";
    if (static_cast<int>(s) == point) os << ", peripheries=2";
    os << "];\n";
  }
  for (const auto& [a, rel] : m.relations)
    for (const auto& [x, y] : rel)
      os << "  \"" << escape(m.states[x]) << "\" -> \"" << escape(m.states[y]) << "\" [label=\""
         << escape(a) << "\", color=\"" << agent_color(m.agents, a) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const ActionModel& a, int point) {
  std::ostringstream os;
  os << "digraph actionmodel {\n  rankdir=LR;\n  node [shape=box];\n";
  for (size_t s = 0; s < a.points.size(); ++s) {
    std::string label = escape(a.points[s]) + "\\npre: " + escape(render(a.pre[s]));
    os << "  \"" << escape(a.points[s]) << "\" [label=\"" << label << "\"";
    if (static_cast<int>(s) == point) os << ", peripheries=2";
    os << "];\n";
  }
  std::vector<AgentId> agents;
  for (const auto& [ag, rel] : a.relations) agents.push_back(ag);
  for (const auto& [ag, rel] : a.relations)
    for (const auto& [x, y] : rel)
      os << "  \"" << escape(a.points[x]) << "\" -> \"" << escape(a.points[y]) << "\" [label=\""
         << escape(ag) << "\", color=\"" << agent_color(agents, ag) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string run_tree_dot(const ProcessTerm& t, const Scenario& sc) {
  std::ostringstream os;
  os << "digraph runs {\n  rankdir=TB;\n  node [shape=box];\n";
  std::vector<ProcessTerm> terms{t};
  std::unordered_map<ProcessTerm, int, ProcessTermHash> ids{{t, 0}};
  for (size_t i = 0; i < terms.size(); ++i) {
    ProcessTerm cur = terms[i];
    os << "  n" << i << " [label=\"" << escape(render(cur)) << "\"";
    if (i == 0) os << ", peripheries=2";
    os << "];\n";
    for (const Transition& tr : transitions(cur, sc)) {
      auto it = ids.find(tr.target);
      int j;
      if (it == ids.end()) {
        j = static_cast<int>(terms.size());
        terms.push_back(tr.target);
        ids.emplace(tr.target, j);
      } else {
        j = it->second;
      }
      os << "  n" << i << " -> n" << j << " [label=\"" << escape(render(tr.label)) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace delwca
