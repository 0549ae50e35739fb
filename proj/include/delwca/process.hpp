#pragma once

#include <vector>

#include "delwca/ast.hpp"
#include "delwca/scenario.hpp"

namespace delwca {

struct Transition {
  ActionRef label;
  ProcessTerm target;
};

// Labelled transition relation. Channel actions are visible labels on plain
// terms; at a parallel composition they are restricted: only synchronizations
// (matching output/input on the same channel) survive, as tau labels whose
// sender/receiver come from the channel declaration. A parallel whose
// branches have all terminated normalizes to `done` in transition targets.
// Order is deterministic: branch moves first (by branch, then by transition),
// then synchronizations by (outputting branch, inputting branch, occurrence).
std::vector<Transition> transitions(const ProcessTerm& t, const Scenario& sc);

enum class RunStatus { Done, Stuck };

// One maximal run of a term: the labels it emits, and whether it ended by
// terminating (Done) or by getting stuck on an unmatchable channel action or
// a deadlocked parallel (Stuck). Stuck runs absorb any sequential
// continuation; `0` and `done` both terminate immediately.
struct Run {
  std::vector<ActionRef> labels;
  RunStatus status = RunStatus::Done;
};

std::vector<Run> runs(const ProcessTerm& t, const Scenario& sc);

// Deduplicated label sequences of runs, in first-occurrence order.
std::vector<std::vector<ActionRef>> trace_labels(const ProcessTerm& t, const Scenario& sc);

// One step of the expansion law: rewrite a parallel composition into the
// choice over its transitions, each as prefix.residual. A parallel with no
// transitions becomes `done` if all branches terminated, else `0`.
// Non-parallel terms are returned unchanged.
ProcessTerm expand(const ProcessTerm& t, const Scenario& sc);

// Expand every parallel composition, including residuals under prefixes.
ProcessTerm expand_deep(const ProcessTerm& t, const Scenario& sc);

// Successful termination: `done`, or a parallel whose branches all are.
bool is_terminated(const ProcessTerm& t);

// Complexity measure used to order reduction steps. On formulas it is the
// usual connective count except that a box multiplies: c([pi]phi) =
// (4 + c(pi)) * c(phi), with c([0]phi) = c([done]phi) = 1 + c(phi).
long long complexity(const Formula& f, const Scenario& sc);
long long complexity(const ProcessTerm& t, const Scenario& sc);

// Strong bisimilarity on the labelled transition system, with successful
// termination distinguished from deadlock (a and a.0 are not bisimilar).
bool bisimilar(const ProcessTerm& a, const ProcessTerm& b, const Scenario& sc);

}  // namespace delwca
