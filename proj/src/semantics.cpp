#include "delwca/semantics.hpp"

namespace delwca {
namespace {

class Evaluator {
 public:
  explicit Evaluator(const Scenario& sc) : sc_(sc) {}

  long long updates = 0;

  bool go(const PointedModel& m, const Formula& f, std::optional<ExecutedRun>& wit) {
    switch (f.kind()) {
      case Formula::Kind::Top:
        return true;
      case Formula::Kind::Atom:
        return m.model.holds(f.prop(), m.point);
      case Formula::Kind::Not:
        return !go(m, f.sub(), wit);
      case Formula::Kind::And:
        return go(m, f.lhs(), wit) && go(m, f.rhs(), wit);
      case Formula::Kind::Knows: {
        for (int s : m.model.successors(f.agent(), m.point))
          if (!go(PointedModel{m.model, s}, f.sub(), wit)) return false;
        return true;
      }
      case Formula::Kind::Box: {
        for (const Run& r : runs(f.program(), sc_)) {
          ExecutedRun ex = walk(m, r);
          if (ex.blocked) continue;  // no surviving point: run is vacuous
          if (!go(ex.final_model, f.sub(), wit)) {
            wit = std::move(ex);
            return false;
          }
        }
        wit.reset();
        return true;
      }
    }
    return false;
  }

  ExecutedRun walk(const PointedModel& m, const Run& r) {
    ExecutedRun ex;
    ex.status = r.status;
    ex.final_model = m;
    for (const ActionRef& label : r.labels) {
      PointedActionModel act = sc_.resolve(label);
      ++updates;
      auto next = product_update(ex.final_model, act, [this](const PointedModel& pm, const Formula& pre) {
        std::optional<ExecutedRun> ignore;
        return go(pm, pre, ignore);
      });
      if (!next) {
        ex.blocked = true;
        ex.blocked_on = label;
        return ex;
      }
      ex.final_model = *next;
      ex.steps.push_back({label, *next});
    }
    return ex;
  }

 private:
  const Scenario& sc_;
};

Formula expand_programs(const Formula& f, const Scenario& sc) {
  switch (f.kind()) {
    case Formula::Kind::Top:
    case Formula::Kind::Atom:
      return f;
    case Formula::Kind::Not:
      return Formula::negation(expand_programs(f.sub(), sc));
    case Formula::Kind::And:
      return Formula::conjunction(expand_programs(f.lhs(), sc), expand_programs(f.rhs(), sc));
    case Formula::Kind::Knows:
      return Formula::knows(f.agent(), expand_programs(f.sub(), sc));
    case Formula::Kind::Box:
      return Formula::box(expand_deep(f.program(), sc), expand_programs(f.sub(), sc));
  }
  return f;
}

}  // namespace

EvalResult eval(const PointedModel& m, const Formula& f, const Scenario& sc) {
  Evaluator ev(sc);
  EvalResult res;
  res.value = ev.go(m, f, res.witness);
  res.updates = ev.updates;
  return res;
}

std::vector<ExecutedRun> execute(const PointedModel& m, const ProcessTerm& t, const Scenario& sc) {
  Evaluator ev(sc);
  std::vector<ExecutedRun> out;
  for (const Run& r : runs(t, sc)) out.push_back(ev.walk(m, r));
  return out;
}

EvalResult eval_via_expansion(const PointedModel& m, const Formula& f, const Scenario& sc) {
  return eval(m, expand_programs(f, sc), sc);
}

}  // namespace delwca
