#include "delwca/reduction.hpp"

#include <memory>
#include <stdexcept>

#include "delwca/action_model.hpp"
#include "delwca/process.hpp"

namespace delwca {
namespace {

class Translator {
 public:
  explicit Translator(const Scenario& sc) : sc_(sc) {}

  std::vector<RewriteStep> steps;

  Formula translate(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Top:
      case Formula::Kind::Atom:
        return f;
      case Formula::Kind::Not:
        return Formula::negation(translate(f.sub()));
      case Formula::Kind::And:
        return Formula::conjunction(translate(f.lhs()), translate(f.rhs()));
      case Formula::Kind::Knows:
        return Formula::knows(f.agent(), translate(f.sub()));
      case Formula::Kind::Box:
        // Innermost first: the body is program-free before the box goes.
        return elim(f.program(), {}, translate(f.sub()));
    }
    return f;
  }

 private:
  const Scenario& sc_;

  void emit(Formula before, Formula after, const char* rule) {
    long long cb = complexity(before, sc_);
    long long ca = complexity(after, sc_);
    steps.push_back({std::move(before), std::move(after), rule, cb, ca});
  }

  // [p; cont...]chi as a single displayed formula.
  static Formula fold_box(const ProcessTerm& p, const std::vector<ProcessTerm>& cont,
                          const Formula& chi) {
    ProcessTerm acc = p;
    for (const ProcessTerm& q : cont) acc = ProcessTerm::seq(acc, q);
    return Formula::box(acc, chi);
  }

  static Formula fold_cont(const std::vector<ProcessTerm>& cont, const Formula& chi) {
    if (cont.empty()) return chi;
    std::vector<ProcessTerm> tail(cont.begin() + 1, cont.end());
    return fold_box(cont.front(), tail, chi);
  }

  // Translation of [cont...]chi.
  Formula elim_cont(std::vector<ProcessTerm> cont, const Formula& chi) {
    if (cont.empty()) return chi;
    ProcessTerm head = cont.front();
    cont.erase(cont.begin());
    return elim(head, std::move(cont), chi);
  }

  // Translation of [p; cont...]chi, chi program-free.
  Formula elim(const ProcessTerm& p, std::vector<ProcessTerm> cont, const Formula& chi) {
    switch (p.kind()) {
      case ProcessTerm::Kind::Nil:
      case ProcessTerm::Kind::Done:
        emit(fold_box(p, cont, chi), fold_cont(cont, chi), "skip");
        return elim_cont(std::move(cont), chi);
      case ProcessTerm::Kind::Act: {
        const ActionRef& a = p.action();
        if (a.is_channel()) {
          // An unmatched channel action sticks; the continuation is
          // unreachable and the body is required where the run stops.
          emit(fold_box(p, cont, chi), chi, "restrict");
          return chi;
        }
        return aml(a, sc_.resolve(a), elim_cont(std::move(cont), chi));
      }
      case ProcessTerm::Kind::Prefix: {
        const ActionRef& a = p.action();
        if (a.is_channel()) {
          emit(fold_box(p, cont, chi), chi, "restrict");
          return chi;
        }
        return aml(a, sc_.resolve(a), elim(p.rest(), std::move(cont), chi));
      }
      case ProcessTerm::Kind::Seq:
        cont.insert(cont.begin(), p.second());
        return elim(p.first(), std::move(cont), chi);
      case ProcessTerm::Kind::Choice: {
        emit(fold_box(p, cont, chi),
             Formula::conjunction(fold_box(p.left(), cont, chi), fold_box(p.right(), cont, chi)),
             "choice");
        Formula l = elim(p.left(), cont, chi);
        Formula r = elim(p.right(), std::move(cont), chi);
        return Formula::conjunction(l, r);
      }
      case ProcessTerm::Kind::Parallel: {
        ProcessTerm e = expand(p, sc_);
        emit(fold_box(p, cont, chi), fold_box(e, cont, chi), "expansion");
        return elim(e, std::move(cont), chi);
      }
    }
    throw std::logic_error("elim: unreachable");
  }

  // The action reference to display for point `s2` of the same model.
  static ActionRef ref_at(const ActionRef& ref, const PointedActionModel& pm, int s2) {
    if (s2 == pm.point) return ref;
    return ActionRef::embedded(
        std::make_shared<const PointedActionModel>(PointedActionModel{pm.model, s2}));
  }

  // Translation of [M,s]psi for an executable action, psi program-free.
  Formula aml(const ActionRef& ref, const PointedActionModel& pm, const Formula& psi) {
    Formula boxed = Formula::box(ProcessTerm::act(ref), psi);
    switch (psi.kind()) {
      case Formula::Kind::Top:
        emit(boxed, Formula::top(), "aml-top");
        return Formula::top();
      case Formula::Kind::Atom:
        emit(boxed, Formula::implication(pm.pre(), psi), "aml-atom");
        return Formula::implication(translate(pm.pre()), psi);
      case Formula::Kind::Not: {
        emit(boxed,
             Formula::implication(
                 pm.pre(), Formula::negation(Formula::box(ProcessTerm::act(ref), psi.sub()))),
             "aml-not");
        return Formula::implication(translate(pm.pre()),
                                    Formula::negation(aml(ref, pm, psi.sub())));
      }
      case Formula::Kind::And: {
        emit(boxed,
             Formula::conjunction(Formula::box(ProcessTerm::act(ref), psi.lhs()),
                                  Formula::box(ProcessTerm::act(ref), psi.rhs())),
             "aml-and");
        return Formula::conjunction(aml(ref, pm, psi.lhs()), aml(ref, pm, psi.rhs()));
      }
      case Formula::Kind::Knows: {
        const AgentId& ag = psi.agent();
        std::vector<int> succ;
        for (int s2 = 0; s2 < static_cast<int>(pm.model.points.size()); ++s2)
          if (pm.model.related(ag, pm.point, s2)) succ.push_back(s2);
        // pre(s) -> /\_{s ~_a s'} K_a [M,s']psi'
        auto body = [&](bool translated) -> Formula {
          Formula acc = Formula::top();
          bool first = true;
          for (int s2 : succ) {
            ActionRef r2 = ref_at(ref, pm, s2);
            Formula inner =
                translated ? aml(r2, PointedActionModel{pm.model, s2}, psi.sub())
                           : Formula::box(ProcessTerm::act(r2), psi.sub());
            Formula k = Formula::knows(ag, inner);
            acc = first ? k : Formula::conjunction(acc, k);
            first = false;
          }
          return acc;
        };
        emit(boxed, Formula::implication(pm.pre(), body(false)), "aml-knows");
        return Formula::implication(translate(pm.pre()), body(true));
      }
      case Formula::Kind::Box:
        throw std::logic_error("aml: body must be program-free");
    }
    throw std::logic_error("aml: unreachable");
  }
};

}  // namespace

Reduction translate(const Formula& f, const Scenario& sc) {
  Translator tr(sc);
  Formula result = tr.translate(f);
  return {std::move(result), std::move(tr.steps)};
}

bool program_free(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Top:
    case Formula::Kind::Atom:
      return true;
    case Formula::Kind::Not:
    case Formula::Kind::Knows:
      return program_free(f.sub());
    case Formula::Kind::And:
      return program_free(f.lhs()) && program_free(f.rhs());
    case Formula::Kind::Box:
      return false;
  }
  return true;
}

}  // namespace delwca
