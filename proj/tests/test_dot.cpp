#include <string>

#include "delwca/action_model.hpp"
#include "delwca/dot.hpp"
#include "delwca/parser.hpp"
#include "delwca/scenario.hpp"
#include "doctest.h"

using namespace delwca;

namespace {

Scenario fixture(const std::string& name) {
  return parse_scenario_file(std::string(DELWCA_FIXTURE_DIR) + "/" + name);
}

int count_occurrences(const std::string& haystack, const std::string& needle) {
  int n = 0;
  for (std::string::size_type at = haystack.find(needle);
       at != std::string::npos; at = haystack.find(needle, at + 1)) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("model export lists every state once and marks the point") {
  Scenario sc = fixture("hexa.delwca");
  auto upd = product_update(sc.model, sc.action_models.at("show"));
  REQUIRE(upd.has_value());

  std::string dot = to_dot(upd->model, upd->point);
  CHECK(dot.rfind("digraph", 0) == 0);
  // Node lines start a line; edge lines mention states after "-> ".
  for (const std::string& name : upd->model.states) {
    CHECK(count_occurrences(dot, "\n  \"" + name + "\" [label=") == 1);
  }
  CHECK(upd->model.states.size() == 6);
  CHECK(count_occurrences(dot, "peripheries=2") == 1);
  // Valuation shows up in the labels.
  CHECK(dot.find("012·sh0\\n0a") != std::string::npos);
}

TEST_CASE("action model export shows preconditions") {
  Scenario sc = fixture("hexa.delwca");
  std::string dot = to_dot(sc.action_models.at("show").model,
                           sc.action_models.at("show").point);
  for (const char* frag : {"sh0", "sh1", "sh2", "0a", "1a", "2a"}) {
    CHECK(dot.find(frag) != std::string::npos);
  }
  CHECK(count_occurrences(dot, "peripheries=2") == 1);
}

TEST_CASE("run graph labels synchronizations") {
  Scenario sc = fixture("meeting.delwca");
  std::string dot = run_tree_dot(sc.parallel_program(), sc);
  CHECK(dot.find("tau[1->2](p)") != std::string::npos);
  CHECK(dot.find("tau[1->3](p)") != std::string::npos);
  // Both interleavings converge on the fully terminated parallel.
  CHECK(dot.find("done") != std::string::npos);
}
