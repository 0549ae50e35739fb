"""Model checker and reduction engine for epistemic logic with communicating processes.

Scenarios (model, action models, channels, per-agent processes, queries) are
parsed from text; formulas are checked either directly, by executing programs
as sequences of product updates, or via the reduction to program-free form.
"""

from ._delwca import (
    EvalError,
    EvalResult,
    Formula,
    ParseError,
    ProcessTerm,
    Reduction,
    RewriteStep,
    Scenario,
    bisimilar,
    complexity,
    evaluate,
    evaluate_static,
    execute,
    expand,
    expand_deep,
    is_s5,
    model_dot,
    parse_formula,
    parse_program,
    parse_scenario,
    parse_scenario_file,
    program_free,
    render,
    run_tree_dot,
    runs,
    students_scenario,
    students_scenario_text,
    traces,
    transitions,
    translate,
)

__all__ = [
    "EvalError",
    "EvalResult",
    "Formula",
    "ParseError",
    "ProcessTerm",
    "Reduction",
    "RewriteStep",
    "Scenario",
    "bisimilar",
    "check",
    "complexity",
    "evaluate",
    "evaluate_static",
    "execute",
    "expand",
    "expand_deep",
    "is_s5",
    "model_dot",
    "parse_formula",
    "parse_program",
    "parse_scenario",
    "parse_scenario_file",
    "program_free",
    "render",
    "run_tree_dot",
    "runs",
    "students_scenario",
    "students_scenario_text",
    "traces",
    "transitions",
    "translate",
]


def check(scenario, formula=None, via="semantics"):
    """Verdict of a formula (or of every scenario query) at the designated state.

    `formula` may be a Formula or concrete syntax; None checks all queries and
    returns a list. `via` selects the engine: "semantics" evaluates directly,
    "reduction" first translates to a program-free formula, "both" runs both
    and raises RuntimeError on disagreement.
    """
    if formula is None:
        return [check(scenario, q, via) for q in scenario.queries]
    if isinstance(formula, str):
        formula = parse_formula(formula, scenario)
    if via == "semantics":
        return evaluate(scenario, formula).value
    if via == "reduction":
        return evaluate_static(scenario, translate(scenario, formula).result)
    if via == "both":
        direct = evaluate(scenario, formula).value
        reduced = evaluate_static(scenario, translate(scenario, formula).result)
        if direct != reduced:
            raise RuntimeError(
                f"engines disagree on {formula}: semantics={direct}, reduction={reduced}"
            )
        return direct
    raise ValueError(f"unknown via: {via!r}")
