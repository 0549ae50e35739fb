// delwca: model checking and reduction for epistemic logic with
// communicating processes.
//
// A scenario file declares agents, an initial model, action models,
// channels and one process per agent; see docs/scenario-format.md.
// Subcommands evaluate queries (directly, or by first translating them to
// program-free formulas), inspect process behaviour, and export graphs.

#include <chrono>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "delwca/action_model.hpp"
#include "delwca/dot.hpp"
#include "delwca/parser.hpp"
#include "delwca/process.hpp"
#include "delwca/reduction.hpp"
#include "delwca/render.hpp"
#include "delwca/scenario.hpp"
#include "delwca/semantics.hpp"
#include "delwca/students.hpp"

#include "delwca/generators.hpp"

namespace {

using namespace delwca;

constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

struct Source {
  std::string file;
  int students = 0;
  bool tau_reflexive = false;

  Scenario load() const {
    Scenario sc = students > 0 ? students_scenario(students)
                               : parse_scenario_file(file);
    if (tau_reflexive) sc.tau_reflexive = true;
    return sc;
  }
};

// FILE is optional only when --students generates the scenario.
void add_source(CLI::App* cmd, Source& src) {
  auto* file = cmd->add_option("file", src.file, "scenario file (.delwca)");
  auto* students = cmd->add_option(
      "--students", src.students,
      "use the generated n-student scenario instead of a file");
  students->check(CLI::Range(1, 6));
  file->excludes(students);
  cmd->add_flag("--tau-reflexive", src.tau_reflexive,
                "outsiders keep the real communication event possible");
  cmd->callback([&src, file, students]() {
    if (file->count() == 0 && students->count() == 0)
      throw CLI::ValidationError("provide a scenario file or --students N");
  });
}

ProcessTerm pick_program(const Scenario& sc, const std::string& text) {
  if (text.empty()) return sc.parallel_program();
  return parse_program(text, sc);
}

std::string trace_line(const Run& run) {
  std::string line;
  for (const ActionRef& a : run.labels) {
    if (!line.empty()) line += " ";
    line += render(a);
  }
  if (line.empty()) line = "(empty)";
  if (run.status == RunStatus::Stuck) line += "  [stuck]";
  return line;
}

void print_model(std::ostream& os, const PointedModel& m) {
  os << "states:";
  for (const std::string& s : m.model.states) os << " " << s;
  os << "\npoint: " << m.point_name() << "\n";
  for (const std::string& s : m.model.states) {
    std::string props;
    for (const auto& [p, where] : m.model.valuation)
      if (where.count(m.model.index_of(s))) props += " " + p;
    if (!props.empty()) os << "val " << s << ":" << props << "\n";
  }
  for (const auto& [agent, rel] : m.model.relations) {
    os << "rel " << agent << ":";
    for (const auto& [x, y] : rel)
      os << " " << m.model.state_name(x) << "~" << m.model.state_name(y);
    os << "\n";
  }
}

int run_check(const Source& src, const std::string& via) {
  Scenario sc = src.load();
  if (sc.queries.empty()) {
    std::cerr << "no queries in scenario\n";
    return kExitError;
  }
  bool all_true = true;
  bool disagreement = false;
  Timer total;
  for (const Formula& q : sc.queries) {
    std::optional<bool> direct, reduced;
    Timer t;
    if (via == "semantics" || via == "both")
      direct = eval(sc.model, q, sc).value;
    if (via == "reduction" || via == "both") {
      Reduction r = translate(q, sc);
      reduced = eval_static(sc.model, r.result);
    }
    bool value = direct ? *direct : *reduced;
    if (direct && reduced && *direct != *reduced) {
      disagreement = true;
      std::cerr << "DISAGREEMENT on " << render(q) << ": semantics says "
                << (*direct ? "true" : "false") << ", reduction says "
                << (*reduced ? "true" : "false") << "\n";
    }
    all_true = all_true && value;
    std::cout << render(q) << "\t" << (value ? "true" : "false") << "\n";
    std::cerr << "  " << t.ms() << " ms\n";
  }
  std::cerr << "checked " << sc.queries.size() << " queries in " << total.ms()
            << " ms (via " << via << ")\n";
  if (disagreement) return kExitError;
  return all_true ? 0 : kExitFalse;
}

int run_expand(const Source& src, const std::string& program, bool once) {
  Scenario sc = src.load();
  ProcessTerm t = pick_program(sc, program);
  std::cout << render(once ? expand(t, sc) : expand_deep(t, sc)) << "\n";
  return 0;
}

int run_traces(const Source& src, const std::string& program) {
  Scenario sc = src.load();
  ProcessTerm t = pick_program(sc, program);
  std::vector<Run> rs = runs(t, sc);
  for (const Run& r : rs) std::cout << trace_line(r) << "\n";
  std::cerr << rs.size() << " runs\n";
  return 0;
}

int run_bisim(const Source& src, const std::string& left,
              const std::string& right) {
  Scenario sc = src.load();
  ProcessTerm a = pick_program(sc, left);
  ProcessTerm b = right.empty() ? expand(a, sc) : parse_program(right, sc);
  if (right.empty())
    std::cerr << "comparing against the expansion " << render(b) << "\n";
  bool eq = bisimilar(a, b, sc);
  std::cout << (eq ? "bisimilar" : "not bisimilar") << "\n";
  return eq ? 0 : kExitFalse;
}

int run_reduce(const Source& src, const std::string& formula) {
  Scenario sc = src.load();
  std::vector<Formula> todo;
  if (!formula.empty())
    todo.push_back(parse_formula(formula, sc));
  else
    todo = sc.queries;
  if (todo.empty()) {
    std::cerr << "nothing to reduce: no --formula and no queries\n";
    return kExitError;
  }
  for (const Formula& f : todo) {
    std::cout << render(f) << "\n";
    Reduction r = translate(f, sc);
    int no = 0;
    for (const RewriteStep& s : r.steps) {
      std::cout << "  " << ++no << ". [" << s.rule << "] "
                << render(s.before) << "  ~>  " << render(s.after) << "   (c "
                << s.c_before << " -> " << s.c_after << ")\n";
    }
    std::cout << "  => " << render(r.result) << "\n";
  }
  return 0;
}

int run_product(const Source& src, const std::vector<std::string>& names) {
  Scenario sc = src.load();
  PointedModel m = sc.model;
  PreEval full = [&sc](const PointedModel& pm, const Formula& f) {
    return eval(pm, f, sc).value;
  };
  for (const std::string& name : names) {
    if (!sc.has_action_model(name)) {
      std::cerr << "unknown action model: " << name << "\n";
      return kExitError;
    }
    auto next = product_update(m, sc.action_models.at(name), full);
    if (!next) {
      std::cout << "blocked at " << name << " (precondition fails at "
                << m.point_name() << ")\n";
      return kExitFalse;
    }
    m = std::move(*next);
  }
  print_model(std::cout, m);
  return 0;
}

int run_export(const Source& src, const std::string& what,
               const std::string& program) {
  Scenario sc = src.load();
  if (what == "model") {
    std::cout << to_dot(sc.model.model, sc.model.point);
  } else if (what == "runtree") {
    std::cout << run_tree_dot(pick_program(sc, program), sc);
  } else if (what.rfind("actionmodel:", 0) == 0) {
    std::string name = what.substr(std::string("actionmodel:").size());
    if (!sc.has_action_model(name)) {
      std::cerr << "unknown action model: " << name << "\n";
      return kExitError;
    }
    const PointedActionModel& am = sc.action_models.at(name);
    std::cout << to_dot(am.model, am.point);
  } else {
    std::cerr << "unknown export target: " << what
              << " (expected model, runtree, or actionmodel:NAME)\n";
    return kExitError;
  }
  return 0;
}

// Randomized cross-checks of the engine against itself: the expansion law,
// the program-free translation, and the complexity measure on transitions.
int run_selftest(std::uint64_t seed, int count) {
  delwca::gen::Gen g(seed);
  Timer total;

  int traces_checked = 0;
  for (int i = 0; i < count; ++i) {
    Scenario sc = delwca::gen::random_context(g);
    ProcessTerm par = delwca::gen::random_parallel(g, sc, g.range(2, 10));
    ProcessTerm ex = expand(par, sc);
    if (!bisimilar(par, ex, sc)) {
      std::cerr << "selftest: expansion not bisimilar for " << render(par)
                << "\n";
      return kExitError;
    }
    if (!(trace_labels(par, sc) == trace_labels(ex, sc))) {
      std::cerr << "selftest: trace mismatch for " << render(par) << "\n";
      return kExitError;
    }
    ++traces_checked;
  }
  std::cout << "expansion law: " << traces_checked << " parallels ok\n";

  int verdicts = 0;
  for (int i = 0; i < count; ++i) {
    Scenario sc = delwca::gen::random_context(g);
    Formula f = delwca::gen::random_formula(g, sc, 3);
    Reduction r = translate(f, sc);
    if (!program_free(r.result)) {
      std::cerr << "selftest: translation left a program in " << render(f)
                << "\n";
      return kExitError;
    }
    if (eval(sc.model, f, sc).value != eval_static(sc.model, r.result)) {
      std::cerr << "selftest: verdict mismatch for " << render(f) << "\n";
      return kExitError;
    }
    ++verdicts;
  }
  std::cout << "translation: " << verdicts << " formulas ok\n";

  int moves = 0;
  for (int i = 0; i < count; ++i) {
    Scenario sc = delwca::gen::random_context(g);
    ProcessTerm t = delwca::gen::random_program(g, sc, g.range(2, 10));
    long long c = complexity(t, sc);
    for (const Transition& tr : transitions(t, sc)) {
      if (complexity(tr.target, sc) >= c) {
        std::cerr << "selftest: transition did not lower complexity on "
                  << render(t) << "\n";
        return kExitError;
      }
      ++moves;
    }
  }
  std::cout << "transitions: " << moves << " moves lower the measure\n";
  std::cerr << "selftest done in " << total.ms() << " ms\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "model checker and reduction engine for epistemic logic with "
      "communicating processes"};
  app.require_subcommand(1);

  Source src;
  std::string via = "semantics";
  std::string program;
  std::string left, right;
  std::string formula;
  std::string what = "model";
  std::vector<std::string> product_names;
  bool expand_once = false;
  std::uint64_t seed = 1;
  int count = 200;

  CLI::App* check = app.add_subcommand("check", "evaluate every query");
  add_source(check, src);
  check->add_option("--via", via, "semantics, reduction, or both")
      ->check(CLI::IsMember({"semantics", "reduction", "both"}));

  CLI::App* expand_cmd =
      app.add_subcommand("expand", "rewrite parallels with the expansion law");
  add_source(expand_cmd, src);
  expand_cmd->add_option("--program", program,
                         "program text (default: the scenario's par)");
  expand_cmd->add_flag("--once", expand_once,
                       "only expand the outermost parallel");

  CLI::App* traces =
      app.add_subcommand("traces", "list every run of a program");
  add_source(traces, src);
  traces->add_option("--program", program,
                     "program text (default: the scenario's par)");

  CLI::App* bisim =
      app.add_subcommand("bisim", "compare two programs up to bisimilarity");
  add_source(bisim, src);
  bisim->add_option("--left", left,
                    "program text (default: the scenario's par)");
  bisim->add_option("--right", right,
                    "program text (default: the expansion of --left)");

  CLI::App* reduce =
      app.add_subcommand("reduce", "translate to a program-free formula");
  add_source(reduce, src);
  reduce->add_option("--formula", formula,
                     "formula text (default: every query)");

  CLI::App* product = app.add_subcommand(
      "product", "update the initial model by named action models");
  add_source(product, src);
  product->add_option("names", product_names, "action model names, in order")
      ->required();

  CLI::App* export_dot =
      app.add_subcommand("export-dot", "write graphviz to stdout");
  add_source(export_dot, src);
  export_dot->add_option(
      "--what", what, "model, runtree, or actionmodel:NAME (default model)");
  export_dot->add_option("--program", program,
                         "program for runtree (default: the scenario's par)");

  CLI::App* selftest = app.add_subcommand(
      "selftest", "randomized agreement checks of the engine against itself");
  selftest->add_option("--seed", seed, "rng seed");
  selftest->add_option("--count", count, "iterations per property")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; every usage error lands on the generic error code.
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (check->parsed()) return run_check(src, via);
    if (expand_cmd->parsed()) return run_expand(src, program, expand_once);
    if (traces->parsed()) return run_traces(src, program);
    if (bisim->parsed()) return run_bisim(src, left, right);
    if (reduce->parsed()) return run_reduce(src, formula);
    if (product->parsed()) return run_product(src, product_names);
    if (export_dot->parsed()) return run_export(src, what, program);
    if (selftest->parsed()) return run_selftest(seed, count);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
