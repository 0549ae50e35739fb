#include <string>
#include <vector>

#include "delwca/action_model.hpp"
#include "delwca/parser.hpp"
#include "delwca/scenario.hpp"
#include "delwca/semantics.hpp"
#include "doctest.h"

using namespace delwca;

namespace {

Scenario hexa() {
  return parse_scenario_file(std::string(DELWCA_FIXTURE_DIR) +
                             "/hexa.delwca");
}

bool same_model(const PointedModel& a, const PointedModel& b) {
  return a.point == b.point && a.model.states == b.model.states &&
         a.model.agents == b.model.agents &&
         a.model.relations == b.model.relations &&
         a.model.valuation == b.model.valuation;
}

}  // namespace

TEST_CASE("card product keeps exactly the pairs whose precondition holds") {
  Scenario sc = hexa();
  const PointedActionModel& show = sc.action_models.at("show");

  // 6 states x 3 events = 18 candidate pairs; each state satisfies exactly
  // one of the preconditions 0a / 1a / 2a, so 6 pairs survive.
  CHECK(sc.model.model.states.size() * show.model.points.size() == 18);

  auto upd = product_update(sc.model, show);
  REQUIRE(upd.has_value());
  CHECK(upd->model.states ==
        std::vector<std::string>{"012·sh0", "021·sh0",
                                 "102·sh1", "120·sh1",
                                 "201·sh2", "210·sh2"});
  CHECK(upd->point_name() == "012·sh0");

  // Equivalences times equivalences restrict to equivalences.
  CHECK(is_s5(upd->model));

  // After the show, b can read a's card but c still cannot.
  CHECK(eval_static(*upd, parse_formula("Kb 0a", sc)));
  CHECK_FALSE(eval_static(*upd, parse_formula("Kc 0a", sc)));
}

TEST_CASE("update is blocked when the designated precondition fails") {
  Scenario sc = hexa();
  const PointedActionModel& show = sc.action_models.at("show");
  // Event sh1 asserts 1a, false at the real deal 012.
  CHECK_FALSE(product_update(sc.model, show.at(1)).has_value());
  // Unrelated surviving pairs do not rescue a blocked point.
  CHECK(product_update({sc.model.model, sc.model.model.index_of("102")},
                       show.at(1))
            .has_value());
}

TEST_CASE("update inherits facts and drops edges into dead pairs") {
  EpistemicModel m;
  m.agents = {"a"};
  m.add_state("u");
  m.add_state("v");
  m.add_fact("p", 0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.add_edge("a", i, j);

  // Public announcement of p: one event whose precondition is p.
  ActionModel ann;
  ann.points = {"e"};
  ann.pre = {Formula::atom("p")};
  ann.relations["a"] = {{0, 0}};

  auto upd = product_update({m, 0}, {ann, 0});
  REQUIRE(upd.has_value());
  CHECK(upd->model.states == std::vector<std::string>{"u·e"});
  CHECK(upd->model.holds("p", 0));
  CHECK(upd->model.related("a", 0, 0));
  CHECK(eval_static(*upd, Formula::knows("a", Formula::atom("p"))));
}

TEST_CASE("tau model has the private-announcement shape") {
  Formula p = Formula::atom("p");
  std::vector<AgentId> agents = {"1", "2", "3"};

  PointedActionModel tm = tau_model("1", "2", p, agents);
  CHECK(tm.point == 0);
  CHECK(tm.model.points == std::vector<std::string>{"s", "t"});
  REQUIRE(tm.model.pre.size() == 2);
  CHECK(tm.model.pre[0] == p);
  CHECK(tm.model.pre[1] == Formula::top());

  // Sender and receiver distinguish the real event from the skip event.
  std::set<StatePair> insider = {{0, 0}, {1, 1}};
  CHECK(tm.model.relations.at("1") == insider);
  CHECK(tm.model.relations.at("2") == insider);

  // The outsider mistakes s for t and has no (s, s) loop by default.
  std::set<StatePair> outsider = {{0, 1}, {1, 1}};
  CHECK(tm.model.relations.at("3") == outsider);

  PointedActionModel tr = tau_model("1", "2", p, agents, true);
  std::set<StatePair> outsider_r = {{0, 0}, {0, 1}, {1, 1}};
  CHECK(tr.model.relations.at("3") == outsider_r);

  CHECK_THROWS_AS(tau_model("1", "1", p, agents), std::invalid_argument);
}

TEST_CASE("tau update informs the receiver and leaves the outsider unsure") {
  EpistemicModel m;
  m.agents = {"1", "2", "3"};
  m.add_state("u");
  m.add_state("v");
  m.add_fact("p", 0);
  m.add_edge("1", 0, 0);
  m.add_edge("1", 1, 1);
  for (const AgentId& ag : {"2", "3"})
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m.add_edge(ag, i, j);

  auto upd = product_update({m, 0},
                            tau_model("1", "2", Formula::atom("p"),
                                      {"1", "2", "3"}));
  REQUIRE(upd.has_value());
  // Survivors: u satisfies p (both events), v only the skip event.
  CHECK(upd->model.states ==
        std::vector<std::string>{"u·s", "u·t", "v·t"});
  CHECK(upd->point_name() == "u·s");

  Formula k2p = Formula::knows("2", Formula::atom("p"));
  Formula k3p = Formula::knows("3", Formula::atom("p"));
  CHECK(eval_static(*upd, k2p));
  CHECK_FALSE(eval_static(*upd, k3p));
  // Without the (s, s) loop the outsider is positively convinced nothing
  // was sent: a false belief, by design of the non-reflexive variant.
  Formula sure_nothing = Formula::knows("3", Formula::negation(k2p));
  CHECK(eval_static(*upd, sure_nothing));

  // The reflexive variant keeps the real event possible for the outsider.
  auto upd_r = product_update({m, 0},
                              tau_model("1", "2", Formula::atom("p"),
                                        {"1", "2", "3"}, true));
  REQUIRE(upd_r.has_value());
  CHECK(eval_static(*upd_r, k2p));
  CHECK_FALSE(eval_static(*upd_r, sure_nothing));
}

TEST_CASE("composition matches running the two updates back to back") {
  EpistemicModel m;
  m.agents = {"a", "b"};
  m.add_state("u");
  m.add_state("v");
  m.add_fact("p", 0);
  m.add_fact("q", 1);
  m.add_edge("a", 0, 0);
  m.add_edge("a", 1, 1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.add_edge("b", i, j);

  ActionModel am;
  am.points = {"a0", "a1"};
  am.pre = {Formula::atom("p"), Formula::top()};
  am.relations["a"] = {{0, 0}, {1, 1}};
  am.relations["b"] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};

  ActionModel bm;
  bm.points = {"b0"};
  bm.pre = {Formula::atom("p")};
  bm.relations["a"] = {{0, 0}};
  bm.relations["b"] = {{0, 0}};

  PointedActionModel pa = {am, 0};
  PointedActionModel pb = {bm, 0};
  PointedActionModel ab = compose(pa, pb);

  CHECK(ab.model.points ==
        std::vector<std::string>{"a0·b0", "a1·b0"});
  CHECK(ab.point == 0);

  // Composed preconditions look through the first update, so they carry a
  // diamond and need the full evaluator.
  Scenario sc;
  sc.agents = m.agents;
  sc.props = {"p", "q"};
  PreEval full = [&sc](const PointedModel& pm, const Formula& f) {
    return eval(pm, f, sc).value;
  };

  auto two_steps = product_update(*product_update({m, 0}, pa), pb);
  auto one_step = product_update({m, 0}, ab, full);
  REQUIRE(two_steps.has_value());
  REQUIRE(one_step.has_value());
  CHECK(same_model(*two_steps, *one_step));
  // State names flatten left-associatively either way.
  CHECK(one_step->point_name() == "u·a0·b0");

  // Blocked first step blocks the composition at the same point.
  PointedModel at_v = {m, 1};
  CHECK_FALSE(product_update(at_v, pa.at(0)).has_value());
  CHECK_FALSE(product_update(at_v, ab, full).has_value());
}

TEST_CASE("resolve maps labels to models and rejects bare channel halves") {
  Scenario sc = parse_scenario_file(std::string(DELWCA_FIXTURE_DIR) +
                                    "/meeting.delwca");

  CHECK(sc.resolve(ActionRef::tau("1", "2", Formula::atom("p")))
            .model.points.size() == 2);
  CHECK_THROWS_WITH_AS(sc.resolve(ActionRef::model("nope")),
                       "unknown action model: nope", EvalError);
  CHECK_THROWS_AS(sc.resolve(ActionRef::input("c12")), EvalError);
  CHECK_THROWS_AS(sc.resolve(ActionRef::output("c12", Formula::atom("p"))),
                  EvalError);

  // The runtime flag flows into freshly built communication models.
  sc.tau_reflexive = true;
  auto tm = sc.resolve(ActionRef::tau("1", "2", Formula::atom("p")));
  CHECK(tm.model.related("3", 0, 0));
}
