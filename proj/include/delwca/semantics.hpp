#pragma once

#include <optional>
#include <vector>

#include "delwca/action_model.hpp"
#include "delwca/kripke.hpp"
#include "delwca/process.hpp"
#include "delwca/scenario.hpp"

namespace delwca {

// One run of a program executed against a pointed model: each successfully
// applied update with the model it produced, plus how the run ended.
struct ExecutedStep {
  ActionRef label;
  PointedModel after;
};

struct ExecutedRun {
  std::vector<ExecutedStep> steps;
  RunStatus status = RunStatus::Done;   // how the process-level run ended
  bool blocked = false;                 // an update had no surviving point
  std::optional<ActionRef> blocked_on;  // the label whose update failed
  PointedModel final_model;             // model at the end (or at the block)
};

struct EvalResult {
  bool value = false;
  // For a failing box: a completed run whose endpoint falsifies the body.
  // Negation passes it through, so a true diamond carries a certifying run.
  std::optional<ExecutedRun> witness;
  long long updates = 0;  // product updates attempted during evaluation
};

// Model-checking with programs: [pi]phi holds iff every run of pi, executed
// as a sequence of product updates, is either blocked by a failing
// precondition or ends in a model satisfying phi. Stuck runs end early and
// phi is required at the point where they stop.
EvalResult eval(const PointedModel& m, const Formula& f, const Scenario& sc);

// Execute all runs of a program against a model.
std::vector<ExecutedRun> execute(const PointedModel& m, const ProcessTerm& t, const Scenario& sc);

// Same verdicts as eval(), but every parallel composition inside box
// programs is first rewritten by the expansion law.
EvalResult eval_via_expansion(const PointedModel& m, const Formula& f, const Scenario& sc);

}  // namespace delwca
