#include "delwca/process.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "delwca/action_model.hpp"
#include "delwca/kripke.hpp"

namespace delwca {
namespace {

using Kind = ProcessTerm::Kind;

void add_unique(std::vector<Transition>& out, ActionRef label, ProcessTerm target) {
  for (const Transition& t : out)
    if (t.label == label && t.target == target) return;
  out.push_back({std::move(label), std::move(target)});
}

// Whether a term can terminate without emitting a label ([] is a Done-run).
bool can_skip(const ProcessTerm& t) {
  switch (t.kind()) {
    case Kind::Nil:
    case Kind::Done:
      return true;
    case Kind::Choice:
      return can_skip(t.left()) || can_skip(t.right());
    case Kind::Seq:
      return can_skip(t.first()) && can_skip(t.second());
    case Kind::Parallel:
      return is_terminated(t);
    default:
      return false;
  }
}

ProcessTerm seq_residual(const ProcessTerm& rest, const ProcessTerm& q) {
  return rest.kind() == Kind::Done ? q : ProcessTerm::seq(rest, q);
}

}  // namespace

bool is_terminated(const ProcessTerm& t) {
  if (t.kind() == Kind::Done) return true;
  if (t.kind() != Kind::Parallel) return false;
  for (const auto& [agent, branch] : t.branches())
    if (branch.kind() != Kind::Done) return false;
  return true;
}

std::vector<Transition> transitions(const ProcessTerm& t, const Scenario& sc) {
  std::vector<Transition> out;
  switch (t.kind()) {
    case Kind::Nil:
    case Kind::Done:
      break;
    case Kind::Act:
      out.push_back({t.action(), ProcessTerm::done()});
      break;
    case Kind::Prefix:
      out.push_back({t.action(), t.rest()});
      break;
    case Kind::Seq: {
      for (const Transition& tr : transitions(t.first(), sc))
        add_unique(out, tr.label, seq_residual(tr.target, t.second()));
      if (can_skip(t.first()))
        for (const Transition& tr : transitions(t.second(), sc)) add_unique(out, tr.label, tr.target);
      break;
    }
    case Kind::Choice: {
      for (const Transition& tr : transitions(t.left(), sc)) add_unique(out, tr.label, tr.target);
      for (const Transition& tr : transitions(t.right(), sc)) add_unique(out, tr.label, tr.target);
      break;
    }
    case Kind::Parallel: {
      const auto& branches = t.branches();
      size_t n = branches.size();
      std::vector<std::vector<Transition>> per(n);
      for (size_t i = 0; i < n; ++i) per[i] = transitions(branches[i].second, sc);

      auto residual = [&](size_t i, const ProcessTerm& bi) {
        std::vector<ProcessTerm::Branch> next(branches.begin(), branches.end());
        next[i].second = bi;
        ProcessTerm p = ProcessTerm::parallel(next);
        return is_terminated(p) ? ProcessTerm::done() : p;
      };
      auto residual2 = [&](size_t i, const ProcessTerm& bi, size_t j, const ProcessTerm& bj) {
        std::vector<ProcessTerm::Branch> next(branches.begin(), branches.end());
        next[i].second = bi;
        next[j].second = bj;
        ProcessTerm p = ProcessTerm::parallel(next);
        return is_terminated(p) ? ProcessTerm::done() : p;
      };

      // Interleaved moves; channel actions are restricted here.
      for (size_t i = 0; i < n; ++i)
        for (const Transition& tr : per[i])
          if (!tr.label.is_channel()) add_unique(out, tr.label, residual(i, tr.target));

      // Synchronization: output in branch i, matching input in branch j.
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          for (const Transition& ti : per[i]) {
            if (ti.label.kind() != ActionRef::Kind::Output) continue;
            for (const Transition& tj : per[j]) {
              if (tj.label.kind() != ActionRef::Kind::Input) continue;
              if (ti.label.channel() != tj.label.channel()) continue;
              const Channel& ch = sc.channel(ti.label.channel());
              add_unique(out, ActionRef::tau(ch.sender, ch.receiver, ti.label.payload()),
                         residual2(i, ti.target, j, tj.target));
            }
          }
        }
      break;
    }
  }
  return out;
}

std::vector<Run> runs(const ProcessTerm& t, const Scenario& sc) {
  switch (t.kind()) {
    case Kind::Nil:
    case Kind::Done:
      return {Run{{}, RunStatus::Done}};
    case Kind::Act:
      if (t.action().is_channel()) return {Run{{}, RunStatus::Stuck}};
      return {Run{{t.action()}, RunStatus::Done}};
    case Kind::Prefix: {
      if (t.action().is_channel()) return {Run{{}, RunStatus::Stuck}};
      std::vector<Run> out;
      for (Run r : runs(t.rest(), sc)) {
        r.labels.insert(r.labels.begin(), t.action());
        out.push_back(std::move(r));
      }
      return out;
    }
    case Kind::Seq: {
      std::vector<Run> out;
      for (const Run& r : runs(t.first(), sc)) {
        if (r.status == RunStatus::Stuck) {
          out.push_back(r);
          continue;
        }
        for (const Run& s : runs(t.second(), sc)) {
          Run joined = r;
          joined.labels.insert(joined.labels.end(), s.labels.begin(), s.labels.end());
          joined.status = s.status;
          out.push_back(std::move(joined));
        }
      }
      return out;
    }
    case Kind::Choice: {
      std::vector<Run> out = runs(t.left(), sc);
      std::vector<Run> r = runs(t.right(), sc);
      out.insert(out.end(), r.begin(), r.end());
      return out;
    }
    case Kind::Parallel: {
      std::vector<Transition> moves = transitions(t, sc);
      if (moves.empty())
        return {Run{{}, is_terminated(t) ? RunStatus::Done : RunStatus::Stuck}};
      std::vector<Run> out;
      for (const Transition& tr : moves)
        for (Run r : runs(tr.target, sc)) {
          r.labels.insert(r.labels.begin(), tr.label);
          out.push_back(std::move(r));
        }
      return out;
    }
  }
  return {};
}

std::vector<std::vector<ActionRef>> trace_labels(const ProcessTerm& t, const Scenario& sc) {
  std::vector<std::vector<ActionRef>> out;
  for (const Run& r : runs(t, sc)) {
    if (std::find(out.begin(), out.end(), r.labels) == out.end()) out.push_back(r.labels);
  }
  return out;
}

ProcessTerm expand(const ProcessTerm& t, const Scenario& sc) {
  if (t.kind() != Kind::Parallel) return t;
  std::vector<Transition> moves = transitions(t, sc);
  if (moves.empty()) return is_terminated(t) ? ProcessTerm::done() : ProcessTerm::nil();
  ProcessTerm acc = ProcessTerm::prefix(moves[0].label, moves[0].target);
  for (size_t i = 1; i < moves.size(); ++i)
    acc = ProcessTerm::choice(acc, ProcessTerm::prefix(moves[i].label, moves[i].target));
  return acc;
}

ProcessTerm expand_deep(const ProcessTerm& t, const Scenario& sc) {
  switch (t.kind()) {
    case Kind::Nil:
    case Kind::Done:
    case Kind::Act:
      return t;
    case Kind::Prefix:
      return ProcessTerm::prefix(t.action(), expand_deep(t.rest(), sc));
    case Kind::Seq:
      return ProcessTerm::seq(expand_deep(t.first(), sc), expand_deep(t.second(), sc));
    case Kind::Choice:
      return ProcessTerm::choice(expand_deep(t.left(), sc), expand_deep(t.right(), sc));
    case Kind::Parallel:
      // Residuals under the produced prefixes are strictly smaller parallels.
      return expand_deep(expand(t, sc), sc);
  }
  return t;
}

long long complexity(const Formula& f, const Scenario& sc) {
  switch (f.kind()) {
    case Formula::Kind::Top:
    case Formula::Kind::Atom:
      return 1;
    case Formula::Kind::Not:
    case Formula::Kind::Knows:
      return 1 + complexity(f.sub(), sc);
    case Formula::Kind::And:
      return 1 + std::max(complexity(f.lhs(), sc), complexity(f.rhs(), sc));
    case Formula::Kind::Box: {
      const ProcessTerm& p = f.program();
      if (p.kind() == Kind::Nil || p.kind() == Kind::Done) return 1 + complexity(f.sub(), sc);
      return (4 + complexity(p, sc)) * complexity(f.sub(), sc);
    }
  }
  return 1;
}

long long complexity(const ProcessTerm& t, const Scenario& sc) {
  switch (t.kind()) {
    case Kind::Nil:
      return 1;
    case Kind::Done:
      return 0;
    case Kind::Act: {
      const ActionRef& a = t.action();
      if (a.is_channel()) return 1;
      PointedActionModel m = sc.resolve(a);
      long long best = 1;
      for (const Formula& pre : m.model.pre) best = std::max(best, complexity(pre, sc));
      return best;
    }
    case Kind::Prefix:
      return 1 + complexity(t.rest(), sc);
    case Kind::Seq:
      return 1 + complexity(t.first(), sc) + complexity(t.second(), sc);
    case Kind::Choice:
      return 2 + std::max(complexity(t.left(), sc), complexity(t.right(), sc));
    case Kind::Parallel: {
      long long sum = static_cast<long long>(t.branches().size());
      for (const auto& [agent, branch] : t.branches()) sum += complexity(branch, sc);
      return sum;
    }
  }
  return 0;
}

bool bisimilar(const ProcessTerm& a, const ProcessTerm& b, const Scenario& sc) {
  // Intern the reachable state space of both terms.
  std::vector<ProcessTerm> terms;
  std::unordered_map<ProcessTerm, int, ProcessTermHash> ids;
  auto intern = [&](const ProcessTerm& t) {
    auto it = ids.find(t);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(terms.size());
    terms.push_back(t);
    ids.emplace(t, id);
    return id;
  };
  int ia = intern(a);
  int ib = intern(b);
  if (ia == ib) return true;

  std::vector<ActionRef> labels;
  auto label_id = [&](const ActionRef& l) {
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return static_cast<int>(i);
    labels.push_back(l);
    return static_cast<int>(labels.size()) - 1;
  };

  // terms grows while iterating; the loop condition picks up new entries.
  std::vector<std::vector<std::pair<int, int>>> edges;  // term id -> (label, target)
  for (size_t i = 0; i < terms.size(); ++i) {
    ProcessTerm t = terms[i];
    edges.emplace_back();
    for (const Transition& tr : transitions(t, sc))
      edges[i].emplace_back(label_id(tr.label), intern(tr.target));
  }

  size_t n = terms.size();
  std::vector<int> block(n);
  bool any_term = false, any_plain = false;
  for (size_t i = 0; i < n; ++i) {
    block[i] = is_terminated(terms[i]) ? 0 : 1;
    (block[i] == 0 ? any_term : any_plain) = true;
  }
  size_t n_blocks = (any_term ? 1u : 0u) + (any_plain ? 1u : 0u);

  // Refinement only splits blocks, so the partition is stable exactly when
  // the block count stops growing.
  for (;;) {
    std::map<std::pair<int, std::vector<std::pair<int, int>>>, int> next_id;
    std::vector<int> next(n);
    for (size_t i = 0; i < n; ++i) {
      std::vector<std::pair<int, int>> sig;
      for (auto [l, tgt] : edges[i]) sig.emplace_back(l, block[tgt]);
      std::sort(sig.begin(), sig.end());
      sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
      auto key = std::make_pair(block[i], std::move(sig));
      auto it = next_id.find(key);
      if (it == next_id.end()) it = next_id.emplace(std::move(key), static_cast<int>(next_id.size())).first;
      next[i] = it->second;
    }
    block = std::move(next);
    if (next_id.size() == n_blocks) break;
    n_blocks = next_id.size();
  }
  return block[ia] == block[ib];
}

}  // namespace delwca
