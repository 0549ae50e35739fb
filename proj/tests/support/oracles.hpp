#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "delwca/ast.hpp"
#include "delwca/process.hpp"
#include "delwca/scenario.hpp"

namespace delwca::testing {

// Reference bisimilarity: greatest fixpoint over the reachable state
// product. Start with all pairs that agree on termination and repeatedly
// delete pairs with an unmatchable transition. Slower but independent of
// the partition-refinement implementation.
inline bool naive_bisim(const ProcessTerm& a, const ProcessTerm& b, const Scenario& sc) {
  std::vector<ProcessTerm> terms{a};
  if (!(b == a)) terms.push_back(b);
  std::vector<std::vector<Transition>> moves;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    moves.push_back(transitions(terms[i], sc));
    for (const Transition& tr : moves.back()) {
      bool known = false;
      for (const ProcessTerm& t : terms)
        if (t == tr.target) {
          known = true;
          break;
        }
      if (!known) terms.push_back(tr.target);
    }
  }
  std::size_t n = terms.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rel[i][j] = is_terminated(terms[i]) == is_terminated(terms[j]);
  auto index_of = [&](const ProcessTerm& t) {
    for (std::size_t i = 0; i < n; ++i)
      if (terms[i] == t) return i;
    return n;
  };
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> edges(n);  // (label, target)
  std::vector<ActionRef> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (const Transition& tr : moves[i]) {
      std::size_t l = labels.size();
      for (std::size_t k = 0; k < labels.size(); ++k)
        if (labels[k] == tr.label) {
          l = k;
          break;
        }
      if (l == labels.size()) labels.push_back(tr.label);
      edges[i].emplace_back(l, index_of(tr.target));
    }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!rel[i][j]) continue;
        auto matched = [&](std::size_t x, std::size_t y) {
          for (auto [l, tx] : edges[x]) {
            bool ok = false;
            for (auto [l2, ty] : edges[y])
              if (l == l2 && rel[tx][ty]) {
                ok = true;
                break;
              }
            if (!ok) return false;
          }
          return true;
        };
        if (!matched(i, j) || !matched(j, i)) {
          rel[i][j] = false;
          changed = true;
        }
      }
  }
  return rel[0][index_of(b)];
}

}  // namespace delwca::testing
