#pragma once

#include <string>
#include <vector>

#include "delwca/ast.hpp"
#include "delwca/scenario.hpp"

namespace delwca {

// One local rewrite in a reduction derivation. `before` is the redex (with
// any pending sequential continuation folded into the displayed program) and
// `after` is what it rewrites to; both carry their complexity measure.
struct RewriteStep {
  Formula before;
  Formula after;
  std::string rule;
  long long c_before = 0;
  long long c_after = 0;
};

struct Reduction {
  Formula result;
  std::vector<RewriteStep> steps;
};

// Rewrites a formula into an equivalent one without program modalities:
// boxes are eliminated innermost-first through the action-model clauses,
// choice splitting, stuck-channel restriction, and the expansion law for
// parallel compositions. The derivation lists every genuine rewrite.
Reduction translate(const Formula& f, const Scenario& sc);

bool program_free(const Formula& f);

}  // namespace delwca
