// Python bindings. Formulas, process terms and scenarios are opaque value
// types; every operation takes the scenario first so the API reads
// uniformly: evaluate(sc, f), expand(sc, t), traces(sc, t), ...

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "delwca/action_model.hpp"
#include "delwca/dot.hpp"
#include "delwca/kripke.hpp"
#include "delwca/parser.hpp"
#include "delwca/process.hpp"
#include "delwca/reduction.hpp"
#include "delwca/render.hpp"
#include "delwca/scenario.hpp"
#include "delwca/semantics.hpp"
#include "delwca/students.hpp"

namespace py = pybind11;
using namespace delwca;

namespace {

std::string status_name(RunStatus s) { return s == RunStatus::Done ? "done" : "stuck"; }

std::vector<std::string> rendered_labels(const std::vector<ActionRef>& labels) {
  std::vector<std::string> out;
  out.reserve(labels.size());
  for (const ActionRef& a : labels) out.push_back(render(a));
  return out;
}

py::dict run_dict(const ExecutedRun& run) {
  py::dict d;
  py::list labels;
  for (const ExecutedStep& step : run.steps) labels.append(render(step.label));
  d["labels"] = labels;
  d["status"] = status_name(run.status);
  d["blocked"] = run.blocked;
  d["blocked_on"] = run.blocked_on ? py::cast(render(*run.blocked_on)) : py::none();
  d["final_state"] = run.final_model.point_name();
  return d;
}

}  // namespace

PYBIND11_MODULE(_delwca, m) {
  m.doc() = "model checker and reduction engine for epistemic logic with "
            "communicating processes";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<EvalError>(m, "EvalError", PyExc_RuntimeError);

  py::class_<Formula>(m, "Formula")
      .def("__str__", [](const Formula& f) { return render(f); })
      .def("__repr__", [](const Formula& f) { return "Formula(" + render(f) + ")"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; },
           py::is_operator())
      .def("__hash__", [](const Formula& f) { return f.hash(); });

  py::class_<ProcessTerm>(m, "ProcessTerm")
      .def("__str__", [](const ProcessTerm& t) { return render(t); })
      .def("__repr__", [](const ProcessTerm& t) { return "ProcessTerm(" + render(t) + ")"; })
      .def("__eq__", [](const ProcessTerm& a, const ProcessTerm& b) { return a == b; },
           py::is_operator())
      .def("__hash__", [](const ProcessTerm& t) { return t.hash(); });

  py::class_<Scenario>(m, "Scenario")
      .def_property_readonly("agents", [](const Scenario& sc) { return sc.agents; })
      .def_property_readonly("props", [](const Scenario& sc) { return sc.props; })
      .def_property_readonly("queries", [](const Scenario& sc) { return sc.queries; })
      .def_property_readonly("states",
                             [](const Scenario& sc) { return sc.model.model.states; })
      .def_property_readonly("point", [](const Scenario& sc) { return sc.model.point_name(); })
      .def_readwrite("tau_reflexive", &Scenario::tau_reflexive)
      .def("parallel_program", &Scenario::parallel_program)
      .def("__repr__", [](const Scenario& sc) {
        return "Scenario(" + std::to_string(sc.model.model.states.size()) + " states, " +
               std::to_string(sc.agents.size()) + " agents)";
      });

  py::class_<EvalResult>(m, "EvalResult")
      .def_readonly("value", &EvalResult::value)
      .def_readonly("updates", &EvalResult::updates)
      .def_property_readonly("witness",
                             [](const EvalResult& r) -> py::object {
                               if (!r.witness) return py::none();
                               return run_dict(*r.witness);
                             })
      .def("__bool__", [](const EvalResult& r) { return r.value; })
      .def("__repr__", [](const EvalResult& r) {
        return std::string("EvalResult(") + (r.value ? "true" : "false") + ")";
      });

  py::class_<RewriteStep>(m, "RewriteStep")
      .def_readonly("rule", &RewriteStep::rule)
      .def_readonly("before", &RewriteStep::before)
      .def_readonly("after", &RewriteStep::after)
      .def_readonly("c_before", &RewriteStep::c_before)
      .def_readonly("c_after", &RewriteStep::c_after)
      .def("__repr__", [](const RewriteStep& s) {
        return "[" + s.rule + "] " + render(s.before) + "  ~>  " + render(s.after);
      });

  py::class_<Reduction>(m, "Reduction")
      .def_readonly("result", &Reduction::result)
      .def_readonly("steps", &Reduction::steps)
      .def("__repr__", [](const Reduction& r) {
        return "Reduction(" + render(r.result) + ", " + std::to_string(r.steps.size()) +
               " steps)";
      });

  m.def("parse_scenario", &parse_scenario, py::arg("text"));
  m.def("parse_scenario_file", &parse_scenario_file, py::arg("path"));
  m.def("parse_formula", &parse_formula, py::arg("text"), py::arg("scenario"));
  m.def("parse_program", &parse_program, py::arg("text"), py::arg("scenario"));
  m.def("students_scenario", &students_scenario, py::arg("n"));
  m.def("students_scenario_text", &students_scenario_text, py::arg("n"));

  m.def("render", py::overload_cast<const Formula&>(&render));
  m.def("render", py::overload_cast<const ProcessTerm&>(&render));

  m.def(
      "evaluate",
      [](const Scenario& sc, const Formula& f) { return eval(sc.model, f, sc); },
      py::arg("scenario"), py::arg("formula"),
      "Model-check a formula at the scenario's designated state.");
  m.def(
      "evaluate_static",
      [](const Scenario& sc, const Formula& f) { return eval_static(sc.model, f); },
      py::arg("scenario"), py::arg("formula"),
      "Satisfaction for program-free formulas only.");
  m.def(
      "execute",
      [](const Scenario& sc, const ProcessTerm& t) {
        py::list out;
        for (const ExecutedRun& run : execute(sc.model, t, sc)) out.append(run_dict(run));
        return out;
      },
      py::arg("scenario"), py::arg("program"),
      "All runs of a program against the model, as dicts.");

  m.def(
      "translate",
      [](const Scenario& sc, const Formula& f) { return translate(f, sc); },
      py::arg("scenario"), py::arg("formula"),
      "Rewrite a formula into an equivalent program-free one.");
  m.def("program_free", &program_free, py::arg("formula"));

  m.def(
      "expand", [](const Scenario& sc, const ProcessTerm& t) { return expand(t, sc); },
      py::arg("scenario"), py::arg("program"));
  m.def(
      "expand_deep",
      [](const Scenario& sc, const ProcessTerm& t) { return expand_deep(t, sc); },
      py::arg("scenario"), py::arg("program"));
  m.def(
      "transitions",
      [](const Scenario& sc, const ProcessTerm& t) {
        py::list out;
        for (const Transition& tr : transitions(t, sc))
          out.append(py::make_tuple(render(tr.label), tr.target));
        return out;
      },
      py::arg("scenario"), py::arg("program"));
  m.def(
      "traces",
      [](const Scenario& sc, const ProcessTerm& t) {
        std::vector<std::vector<std::string>> out;
        for (const auto& labels : trace_labels(t, sc)) out.push_back(rendered_labels(labels));
        return out;
      },
      py::arg("scenario"), py::arg("program"),
      "Deduplicated label sequences of all runs.");
  m.def(
      "runs",
      [](const Scenario& sc, const ProcessTerm& t) {
        py::list out;
        for (const Run& r : runs(t, sc))
          out.append(py::make_tuple(rendered_labels(r.labels), status_name(r.status)));
        return out;
      },
      py::arg("scenario"), py::arg("program"));
  m.def(
      "bisimilar",
      [](const Scenario& sc, const ProcessTerm& a, const ProcessTerm& b) {
        return bisimilar(a, b, sc);
      },
      py::arg("scenario"), py::arg("left"), py::arg("right"));
  m.def(
      "complexity",
      [](const Scenario& sc, const Formula& f) { return complexity(f, sc); },
      py::arg("scenario"), py::arg("formula"));
  m.def(
      "complexity",
      [](const Scenario& sc, const ProcessTerm& t) { return complexity(t, sc); },
      py::arg("scenario"), py::arg("program"));

  m.def(
      "is_s5", [](const Scenario& sc) { return is_s5(sc.model.model); },
      py::arg("scenario"));
  m.def(
      "model_dot",
      [](const Scenario& sc) { return to_dot(sc.model.model, sc.model.point); },
      py::arg("scenario"), "The initial model as Graphviz DOT.");
  m.def(
      "run_tree_dot",
      [](const Scenario& sc, const ProcessTerm& t) { return run_tree_dot(t, sc); },
      py::arg("scenario"), py::arg("program"),
      "The reachable transition graph of a program as Graphviz DOT.");
}
