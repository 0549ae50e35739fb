#include "delwca/ast.hpp"

#include "delwca/action_model.hpp"

namespace delwca {
namespace {

std::size_t hash_mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_str(const std::string& s) {
  return std::hash<std::string>{}(s);
}

bool models_equal(const PointedActionModel& a, const PointedActionModel& b) {
  if (a.point != b.point || a.model.points != b.model.points ||
      a.model.relations != b.model.relations) {
    return false;
  }
  if (a.model.pre.size() != b.model.pre.size()) return false;
  for (std::size_t i = 0; i < a.model.pre.size(); ++i) {
    if (a.model.pre[i] != b.model.pre[i]) return false;
  }
  return true;
}

std::size_t model_hash(const PointedActionModel& m) {
  std::size_t h = m.point;
  for (const auto& p : m.model.points) h = hash_mix(h, hash_str(p));
  for (const auto& [agent, rel] : m.model.relations) {
    h = hash_mix(h, hash_str(agent));
    for (const auto& [x, y] : rel) h = hash_mix(h, (std::size_t)x * 131 + y);
  }
  for (const auto& f : m.model.pre) h = hash_mix(h, f.hash());
  return h;
}

}  // namespace

// ---------------------------------------------------------------------------
// Formula

struct Formula::Node {
  Kind kind;
  PropId prop;
  AgentId agent;
  std::vector<Formula> children;
  std::shared_ptr<const ProcessTerm> program;
};

Formula Formula::make(Kind kind, PropId prop, AgentId agent, std::vector<Formula> children,
                      std::shared_ptr<const ProcessTerm> program) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->prop = std::move(prop);
  node->agent = std::move(agent);
  node->children = std::move(children);
  node->program = std::move(program);
  return Formula(std::shared_ptr<const Node>(std::move(node)));
}

Formula Formula::top() {
  static const Formula instance = make(Kind::Top, "", "", {}, nullptr);
  return instance;
}

Formula Formula::atom(PropId prop) {
  return make(Kind::Atom, std::move(prop), "", {}, nullptr);
}

Formula Formula::negation(Formula f) {
  return make(Kind::Not, "", "", {std::move(f)}, nullptr);
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return make(Kind::And, "", "", {std::move(lhs), std::move(rhs)}, nullptr);
}

Formula Formula::knows(AgentId agent, Formula f) {
  return make(Kind::Knows, "", std::move(agent), {std::move(f)}, nullptr);
}

Formula Formula::box(ProcessTerm program, Formula f) {
  return make(Kind::Box, "", "", {std::move(f)},
              std::make_shared<const ProcessTerm>(std::move(program)));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return negation(conjunction(negation(std::move(lhs)),
                              negation(std::move(rhs))));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return negation(conjunction(std::move(lhs), negation(std::move(rhs))));
}

Formula Formula::diamond(ProcessTerm program, Formula f) {
  return negation(box(std::move(program), negation(std::move(f))));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const PropId& Formula::prop() const { return node_->prop; }

const AgentId& Formula::agent() const { return node_->agent; }

const Formula& Formula::lhs() const { return node_->children.at(0); }

const Formula& Formula::rhs() const { return node_->children.at(1); }

const Formula& Formula::sub() const { return node_->children.at(0); }

const ProcessTerm& Formula::program() const { return *node_->program; }

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Top:
      return true;
    case Kind::Atom:
      return node_->prop == other.node_->prop;
    case Kind::Not:
      return sub() == other.sub();
    case Kind::And:
      return lhs() == other.lhs() && rhs() == other.rhs();
    case Kind::Knows:
      return node_->agent == other.node_->agent && sub() == other.sub();
    case Kind::Box:
      return program() == other.program() && sub() == other.sub();
  }
  return false;
}

std::size_t Formula::hash() const {
  std::size_t h = static_cast<std::size_t>(node_->kind) + 1;
  switch (node_->kind) {
    case Kind::Top:
      break;
    case Kind::Atom:
      h = hash_mix(h, hash_str(node_->prop));
      break;
    case Kind::Not:
      h = hash_mix(h, sub().hash());
      break;
    case Kind::And:
      h = hash_mix(hash_mix(h, lhs().hash()), rhs().hash());
      break;
    case Kind::Knows:
      h = hash_mix(hash_mix(h, hash_str(node_->agent)), sub().hash());
      break;
    case Kind::Box:
      h = hash_mix(hash_mix(h, program().hash()), sub().hash());
      break;
  }
  return h;
}

// ---------------------------------------------------------------------------
// ActionRef

struct ActionRef::Node {
  Kind kind;
  std::string name;     // Model
  ChannelId channel;    // Input, Output
  AgentId sender;       // Tau
  AgentId receiver;     // Tau
  std::shared_ptr<const Formula> payload;  // Output, Tau
  std::shared_ptr<const PointedActionModel> value;  // Embedded
};

ActionRef ActionRef::make(Kind kind, std::string name, ChannelId channel, AgentId sender,
                          AgentId receiver, std::shared_ptr<const Formula> payload,
                          std::shared_ptr<const PointedActionModel> value) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  node->channel = std::move(channel);
  node->sender = std::move(sender);
  node->receiver = std::move(receiver);
  node->payload = std::move(payload);
  node->value = std::move(value);
  return ActionRef(std::shared_ptr<const Node>(std::move(node)));
}

ActionRef ActionRef::model(std::string name) {
  return make(Kind::Model, std::move(name), "", "", "", nullptr, nullptr);
}

ActionRef ActionRef::input(ChannelId channel) {
  return make(Kind::Input, "", std::move(channel), "", "", nullptr, nullptr);
}

ActionRef ActionRef::output(ChannelId channel, Formula payload) {
  return make(Kind::Output, "", std::move(channel), "", "",
              std::make_shared<const Formula>(std::move(payload)), nullptr);
}

ActionRef ActionRef::tau(AgentId sender, AgentId receiver, Formula payload) {
  return make(Kind::Tau, "", "", std::move(sender), std::move(receiver),
              std::make_shared<const Formula>(std::move(payload)), nullptr);
}

ActionRef ActionRef::embedded(std::shared_ptr<const PointedActionModel> value) {
  return make(Kind::Embedded, "", "", "", "", nullptr, std::move(value));
}

ActionRef::Kind ActionRef::kind() const { return node_->kind; }

bool ActionRef::is_channel() const {
  return node_->kind == Kind::Input || node_->kind == Kind::Output;
}

const std::string& ActionRef::name() const { return node_->name; }

const ChannelId& ActionRef::channel() const { return node_->channel; }

const Formula& ActionRef::payload() const { return *node_->payload; }

const AgentId& ActionRef::sender() const { return node_->sender; }

const AgentId& ActionRef::receiver() const { return node_->receiver; }

const std::shared_ptr<const PointedActionModel>& ActionRef::value() const {
  return node_->value;
}

bool ActionRef::operator==(const ActionRef& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Model:
      return node_->name == other.node_->name;
    case Kind::Input:
      return node_->channel == other.node_->channel;
    case Kind::Output:
      return node_->channel == other.node_->channel &&
             payload() == other.payload();
    case Kind::Tau:
      return node_->sender == other.node_->sender &&
             node_->receiver == other.node_->receiver &&
             payload() == other.payload();
    case Kind::Embedded:
      return models_equal(*node_->value, *other.node_->value);
  }
  return false;
}

std::size_t ActionRef::hash() const {
  std::size_t h = static_cast<std::size_t>(node_->kind) + 0x51;
  switch (node_->kind) {
    case Kind::Model:
      h = hash_mix(h, hash_str(node_->name));
      break;
    case Kind::Input:
      h = hash_mix(h, hash_str(node_->channel));
      break;
    case Kind::Output:
      h = hash_mix(hash_mix(h, hash_str(node_->channel)), payload().hash());
      break;
    case Kind::Tau:
      h = hash_mix(h, hash_str(node_->sender));
      h = hash_mix(h, hash_str(node_->receiver));
      h = hash_mix(h, payload().hash());
      break;
    case Kind::Embedded:
      h = hash_mix(h, model_hash(*node_->value));
      break;
  }
  return h;
}

// ---------------------------------------------------------------------------
// ProcessTerm

struct ProcessTerm::Node {
  Kind kind;
  std::shared_ptr<const ActionRef> action;  // Act, Prefix
  std::vector<ProcessTerm> children;        // Prefix(1), Seq/Choice(2)
  std::vector<Branch> branches;             // Parallel
};

ProcessTerm ProcessTerm::make(Kind kind, std::shared_ptr<const ActionRef> action,
                              std::vector<ProcessTerm> children, std::vector<Branch> branches) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->action = std::move(action);
  node->children = std::move(children);
  node->branches = std::move(branches);
  return ProcessTerm(std::shared_ptr<const Node>(std::move(node)));
}

ProcessTerm ProcessTerm::act(ActionRef action) {
  return make(Kind::Act, std::make_shared<const ActionRef>(std::move(action)), {}, {});
}

ProcessTerm ProcessTerm::prefix(ActionRef action, ProcessTerm rest) {
  return make(Kind::Prefix, std::make_shared<const ActionRef>(std::move(action)),
              {std::move(rest)}, {});
}

ProcessTerm ProcessTerm::seq(ProcessTerm first, ProcessTerm second) {
  return make(Kind::Seq, nullptr, {std::move(first), std::move(second)}, {});
}

ProcessTerm ProcessTerm::choice(ProcessTerm left, ProcessTerm right) {
  return make(Kind::Choice, nullptr, {std::move(left), std::move(right)}, {});
}

ProcessTerm ProcessTerm::parallel(std::vector<Branch> branches) {
  return make(Kind::Parallel, nullptr, {}, std::move(branches));
}

ProcessTerm ProcessTerm::done() {
  static const ProcessTerm instance = make(Kind::Done, nullptr, {}, {});
  return instance;
}

ProcessTerm ProcessTerm::nil() {
  static const ProcessTerm instance = make(Kind::Nil, nullptr, {}, {});
  return instance;
}

ProcessTerm::Kind ProcessTerm::kind() const { return node_->kind; }

const ActionRef& ProcessTerm::action() const { return *node_->action; }

const ProcessTerm& ProcessTerm::rest() const { return node_->children.at(0); }

const ProcessTerm& ProcessTerm::first() const { return node_->children.at(0); }

const ProcessTerm& ProcessTerm::second() const {
  return node_->children.at(1);
}

const ProcessTerm& ProcessTerm::left() const { return node_->children.at(0); }

const ProcessTerm& ProcessTerm::right() const { return node_->children.at(1); }

const std::vector<ProcessTerm::Branch>& ProcessTerm::branches() const {
  return node_->branches;
}

bool ProcessTerm::contains_parallel() const {
  if (node_->kind == Kind::Parallel) return true;
  for (const auto& c : node_->children) {
    if (c.contains_parallel()) return true;
  }
  return false;
}

bool ProcessTerm::contains_channel_action() const {
  switch (node_->kind) {
    case Kind::Act:
    case Kind::Prefix:
      if (action().is_channel()) return true;
      break;
    default:
      break;
  }
  for (const auto& c : node_->children) {
    if (c.contains_channel_action()) return true;
  }
  for (const auto& [agent, term] : node_->branches) {
    if (term.contains_channel_action()) return true;
  }
  return false;
}

bool ProcessTerm::operator==(const ProcessTerm& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Done:
    case Kind::Nil:
      return true;
    case Kind::Act:
      return action() == other.action();
    case Kind::Prefix:
      return action() == other.action() && rest() == other.rest();
    case Kind::Seq:
    case Kind::Choice:
      return node_->children[0] == other.node_->children[0] &&
             node_->children[1] == other.node_->children[1];
    case Kind::Parallel: {
      if (node_->branches.size() != other.node_->branches.size()) return false;
      for (std::size_t i = 0; i < node_->branches.size(); ++i) {
        if (node_->branches[i].first != other.node_->branches[i].first ||
            node_->branches[i].second != other.node_->branches[i].second) {
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

std::size_t ProcessTerm::hash() const {
  std::size_t h = static_cast<std::size_t>(node_->kind) + 0xa1;
  if (node_->action) h = hash_mix(h, node_->action->hash());
  for (const auto& c : node_->children) h = hash_mix(h, c.hash());
  for (const auto& [agent, term] : node_->branches) {
    h = hash_mix(hash_mix(h, hash_str(agent)), term.hash());
  }
  return h;
}

}  // namespace delwca
