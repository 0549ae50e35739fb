#include "doctest.h"

#include "delwca/action_model.hpp"
#include "delwca/parser.hpp"
#include "delwca/render.hpp"

using namespace delwca;

namespace {

Scenario tiny() {
  return parse_scenario(
      "agents: a b\n"
      "props: p q r\n"
      "states: u\n"
      "init: u\n"
      "actionmodel m:\n"
      "  points: e0\n"
      "  init: e0\n"
      "  pre e0: p\n"
      "  rel a: id\n"
      "end\n"
      "channel c: a -> b\n");
}

std::string reparse_formula(const std::string& text) {
  Scenario sc = tiny();
  return render(parse_formula(text, sc));
}

std::string reparse_program(const std::string& text) {
  Scenario sc = tiny();
  return render(parse_program(text, sc));
}

}  // namespace

TEST_CASE("formula precedence and sugar") {
  CHECK(reparse_formula("p & q & r") == "p & q & r");
  CHECK(reparse_formula("p & (q & r)") == "p & (q & r)");
  // | and -> are sugar over the core connectives.
  CHECK(reparse_formula("p | q") == "~(~p & ~q)");
  CHECK(reparse_formula("p -> q") == "~(p & ~q)");
  // -> is right-associative and binds loosest.
  CHECK(reparse_formula("p -> q -> r") == reparse_formula("p -> (q -> r)"));
  CHECK(reparse_formula("~p & q") == "~p & q");
  CHECK(reparse_formula("~(p & q)") == "~(p & q)");
  CHECK(reparse_formula("false") == "~true");
}

TEST_CASE("knowledge operator identifiers") {
  Scenario sc = tiny();
  Formula f = parse_formula("Ka p", sc);
  REQUIRE(f.kind() == Formula::Kind::Knows);
  CHECK(f.agent() == "a");
  CHECK(render(f) == "Ka p");
  CHECK(render(parse_formula("Ka Kb p", sc)) == "Ka Kb p");
  CHECK(render(parse_formula("~Ka (p & q)", sc)) == "~Ka (p & q)");
  // Kc is not a knowledge operator (no agent c) and not a declared prop.
  CHECK_THROWS_AS(parse_formula("Kc p", sc), ParseError);
}

TEST_CASE("modalities") {
  Scenario sc = tiny();
  CHECK(render(parse_formula("[m]p", sc)) == "[m]p");
  CHECK(render(parse_formula("<m>p", sc)) == "~[m]~p");
  CHECK(render(parse_formula("[m; m]Ka p", sc)) == "[m; m]Ka p");
  CHECK(render(parse_formula("[c!(p)]q", sc)) == "[c!(p)]q");
  CHECK(render(parse_formula("[tau[a->b](p)]q", sc)) == "[tau[a->b](p)]q");
  CHECK_THROWS_AS(parse_formula("[tau[a->a](p)]q", sc), ParseError);
  CHECK_THROWS_AS(parse_formula("[x]p", sc), ParseError);
}

TEST_CASE("program precedence") {
  CHECK(reparse_program("m.m; m + m") == "m.m; m + m");  // (m.m; m) + m
  CHECK(reparse_program("m; (m + m)") == "m; (m + m)");
  CHECK(reparse_program("m.(m + m)") == "m.(m + m)");
  CHECK(reparse_program("0") == "0");
  CHECK(reparse_program("done") == "done");
  CHECK(reparse_program("c!(p & q)") == "c!(p & q)");
  CHECK(reparse_program("c?.m") == "c?.m");
}

TEST_CASE("prefix head must be a single action") {
  Scenario sc = tiny();
  CHECK_THROWS_AS(parse_program("(m + m).m", sc), ParseError);
  CHECK_THROWS_AS(parse_program("0.m", sc), ParseError);
  CHECK_THROWS_AS(parse_program("done.m", sc), ParseError);
}

TEST_CASE("parallel only at top level") {
  Scenario sc = tiny();
  ProcessTerm par = parse_program("m || c?", sc);
  REQUIRE(par.kind() == ProcessTerm::Kind::Parallel);
  REQUIRE(par.branches().size() == 2);
  CHECK(par.branches()[0].first == "a");
  CHECK(par.branches()[1].first == "b");
  CHECK(render(par) == "m || c?");
  // One branch per declared agent.
  CHECK_THROWS_AS(parse_program("m || m || m", sc), ParseError);
  CHECK_THROWS_AS(parse_program("(m || m)", sc), ParseError);
  CHECK_THROWS_AS(parse_program("m; (m || m)", sc), ParseError);
  CHECK_THROWS_AS(parse_program("m; par", sc), ParseError);
}

TEST_CASE("choice binds looser than || branches") {
  Scenario sc = tiny();
  ProcessTerm par = parse_program("m + m.m || c?", sc);
  REQUIRE(par.kind() == ProcessTerm::Kind::Parallel);
  CHECK(par.branches()[0].second.kind() == ProcessTerm::Kind::Choice);
}

TEST_CASE("scenario declarations are order independent") {
  Scenario sc = parse_scenario(
      "query: [m]p\n"
      "proc a: m\n"
      "init: u\n"
      "states: u v\n"
      "val: u p\n"
      "rel a: u v\n"
      "actionmodel m:\n"
      "  points: e0\n"
      "  init: e0\n"
      "  pre e0: p\n"
      "end\n"
      "props: p\n"
      "agents: a b\n");
  CHECK(sc.agents == std::vector<AgentId>{"a", "b"});
  CHECK(sc.model.model.states.size() == 2);
  CHECK(sc.model.point == 0);
  CHECK(sc.queries.size() == 1);
  CHECK(sc.programs.count("a") == 1);
}

TEST_CASE("s5 flag closes relations") {
  Scenario sc = parse_scenario(
      "agents: a\n"
      "props: p\n"
      "states: u v w\n"
      "init: u\n"
      "s5\n"
      "rel a: u v\n");
  const auto& rel = sc.model.model.relations.at("a");
  // reflexive everywhere, u~v closed symmetrically, w only to itself
  CHECK(rel.count({0, 0}) == 1);
  CHECK(rel.count({1, 0}) == 1);
  CHECK(rel.count({2, 2}) == 1);
  CHECK(rel.count({0, 2}) == 0);
  CHECK(rel.size() == 5);

  Scenario raw = parse_scenario(
      "agents: a\n"
      "props: p\n"
      "states: u v w\n"
      "init: u\n"
      "rel a: u v\n");
  CHECK(raw.model.model.relations.at("a").size() == 1);
}

TEST_CASE("declaration errors carry locations and names") {
  auto expect_error = [](const std::string& text, const std::string& needle) {
    try {
      parse_scenario(text);
      FAIL_CHECK("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_error("agents: a a\nstates: u\ninit: u\n", "duplicate agent");
  expect_error("agents: a\nprops: p p\nstates: u\ninit: u\n", "duplicate prop");
  expect_error("agents: a\nprops: Ka\nstates: u\ninit: u\n", "knowledge operator");
  expect_error("agents: a\nprops: done\nstates: u\ninit: u\n", "reserved");
  expect_error("agents: a\nstates: u\ninit: v\n", "unknown state");
  expect_error("agents: a\nstates: u\ninit: u\nrel b: u u\n", "unknown agent");
  expect_error("agents: a b\nstates: u\ninit: u\nchannel c: a -> a\n", "distinct");
  expect_error("agents: a b\nstates: u\ninit: u\nchannel c: a -> x\n", "unknown agent");
  expect_error("agents: a\nstates: u\ninit: u\nval: u p\n", "unknown prop");
  expect_error("agents: a\nstates: u\n", "missing 'init:'");
  expect_error("states: u\ninit: u\n", "missing 'agents:'");
  expect_error("agents: a\nstates: u\ninit: u\nactionmodel m:\n  points: e\n  init: e\n",
               "not closed");
  // Earlier models are in scope syntactically, but pres may not use them.
  expect_error(
      "agents: a\nprops: p\nstates: u\ninit: u\n"
      "actionmodel n:\n  points: e\nend\n"
      "actionmodel m:\n  points: e\n  init: e\n  pre e: [n]p\nend\n",
      "program-free");
  expect_error(
      "agents: a\nprops: p\nstates: u\ninit: u\n"
      "actionmodel m:\n  points: e\n  init: e\n  pre e: [m]p\nend\n",
      "unknown action model");
  expect_error("agents: a b\nstates: u\ninit: u\nchannel c: a -> b\nproc a: c? || c?\n",
               "proc body");
}

TEST_CASE("line and column in parse errors") {
  try {
    parse_scenario("agents: a\nprops: p\nstates: u\ninit: u\nquery: p & & q\n");
    FAIL_CHECK("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 5);
    CHECK(e.col > 8);
  }
}

TEST_CASE("action model defaults and sugar") {
  Scenario sc = parse_scenario(
      "agents: a b\n"
      "props: p\n"
      "states: u\n"
      "init: u\n"
      "actionmodel m:\n"
      "  points: e0 e1\n"
      "  init: e1\n"
      "  pre e0: p\n"
      "  rel a: id\n"
      "  rel b: all\n"
      "end\n");
  const PointedActionModel& m = sc.action_models.at("m");
  CHECK(m.point == 1);
  CHECK(m.pre() == Formula::top());  // missing pre defaults to true
  CHECK(m.model.relations.at("a").size() == 2);
  CHECK(m.model.relations.at("b").size() == 4);
}

TEST_CASE("fixtures parse") {
  for (const char* name : {"hexa.delwca", "meeting.delwca", "students3.delwca", "mixed.delwca"}) {
    CAPTURE(name);
    Scenario sc = parse_scenario_file(std::string(DELWCA_FIXTURE_DIR) + "/" + name);
    CHECK(!sc.queries.empty());
  }
}
