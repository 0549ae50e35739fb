#include "delwca/render.hpp"

#include <sstream>

#include "delwca/action_model.hpp"

namespace delwca {
namespace {

// Formula precedence: '&' is the only infix (sugar normalizes away '|' and
// '->'); unary operators bind tighter and extend as far right as possible.
enum class FCtx { And, Unary };

void render_formula(std::ostream& os, const Formula& f, FCtx ctx);
void render_term(std::ostream& os, const ProcessTerm& t, int min_level);

void render_action(std::ostream& os, const ActionRef& a) {
  switch (a.kind()) {
    case ActionRef::Kind::Model:
      os << a.name();
      return;
    case ActionRef::Kind::Input:
      os << a.channel() << "?";
      return;
    case ActionRef::Kind::Output:
      os << a.channel() << "!(";
      render_formula(os, a.payload(), FCtx::And);
      os << ")";
      return;
    case ActionRef::Kind::Tau:
      os << "tau[" << a.sender() << "->" << a.receiver() << "](";
      render_formula(os, a.payload(), FCtx::And);
      os << ")";
      return;
    case ActionRef::Kind::Embedded:
      // Display-only: embedded models arise from composition and carry no
      // scenario-level name.
      os << "{am:" << a.value()->point_name() << "}";
      return;
  }
}

void render_formula(std::ostream& os, const Formula& f, FCtx ctx) {
  switch (f.kind()) {
    case Formula::Kind::Top:
      os << "true";
      return;
    case Formula::Kind::Atom:
      os << f.prop();
      return;
    case Formula::Kind::Not:
      os << "~";
      render_formula(os, f.sub(), FCtx::Unary);
      return;
    case Formula::Kind::And: {
      bool parens = ctx == FCtx::Unary;
      if (parens) os << "(";
      render_formula(os, f.lhs(), FCtx::And);
      os << " & ";
      // '&' folds left, so a right-nested conjunct keeps its parentheses.
      render_formula(os, f.rhs(), FCtx::Unary);
      if (parens) os << ")";
      return;
    }
    case Formula::Kind::Knows:
      os << "K" << f.agent() << " ";
      render_formula(os, f.sub(), FCtx::Unary);
      return;
    case Formula::Kind::Box:
      os << "[";
      render_term(os, f.program(), -1);
      os << "]";
      render_formula(os, f.sub(), FCtx::Unary);
      return;
  }
}

// Term levels: -1 parallel, 0 choice, 1 seq, 2 prefix, 3 primary.
int term_level(const ProcessTerm& t) {
  switch (t.kind()) {
    case ProcessTerm::Kind::Parallel:
      return -1;
    case ProcessTerm::Kind::Choice:
      return 0;
    case ProcessTerm::Kind::Seq:
      return 1;
    case ProcessTerm::Kind::Prefix:
      return 2;
    default:
      return 3;
  }
}

void render_term(std::ostream& os, const ProcessTerm& t, int min_level) {
  bool parens = term_level(t) < min_level;
  if (parens) os << "(";
  switch (t.kind()) {
    case ProcessTerm::Kind::Nil:
      os << "0";
      break;
    case ProcessTerm::Kind::Done:
      os << "done";
      break;
    case ProcessTerm::Kind::Act:
      render_action(os, t.action());
      break;
    case ProcessTerm::Kind::Prefix:
      render_action(os, t.action());
      os << ".";
      // Prefix folds right: a.b.c parses as a.(b.c).
      render_term(os, t.rest(), 2);
      break;
    case ProcessTerm::Kind::Seq:
      render_term(os, t.first(), 1);
      os << "; ";
      render_term(os, t.second(), 2);
      break;
    case ProcessTerm::Kind::Choice:
      render_term(os, t.left(), 0);
      os << " + ";
      render_term(os, t.right(), 1);
      break;
    case ProcessTerm::Kind::Parallel: {
      bool first = true;
      for (const auto& [agent, branch] : t.branches()) {
        if (!first) os << " || ";
        first = false;
        render_term(os, branch, 0);
      }
      break;
    }
  }
  if (parens) os << ")";
}

}  // namespace

std::string render(const Formula& f) {
  std::ostringstream os;
  render_formula(os, f, FCtx::And);
  return os.str();
}

std::string render(const ProcessTerm& t) {
  std::ostringstream os;
  render_term(os, t, -1);
  return os.str();
}

std::string render(const ActionRef& a) {
  std::ostringstream os;
  render_action(os, a);
  return os.str();
}

}  // namespace delwca
