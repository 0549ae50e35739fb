#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Abstract syntax for epistemic formulas and communicating process terms.
// Formulas and process terms are mutually recursive: a Box formula carries a
// program, and an Output action carries a payload formula. Both types are
// immutable values backed by shared nodes, so copies are cheap and structural
// equality / hashing are well defined.

namespace delwca {

using AgentId = std::string;
using PropId = std::string;
using ChannelId = std::string;

// A directed private channel between two distinct agents.
struct Channel {
  ChannelId name;
  AgentId sender;
  AgentId receiver;
};

class ProcessTerm;
struct PointedActionModel;

class Formula {
 public:
  enum class Kind { Top, Atom, Not, And, Knows, Box };

  // Core constructors.
  static Formula top();
  static Formula atom(PropId prop);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula knows(AgentId agent, Formula f);
  static Formula box(ProcessTerm program, Formula f);

  // Sugar; normalized to the core constructors on the spot.
  static Formula disjunction(Formula lhs, Formula rhs);  // ~(~a & ~b)
  static Formula implication(Formula lhs, Formula rhs);  // ~(a & ~b)
  static Formula diamond(ProcessTerm program, Formula f);  // ~[pi]~f

  Kind kind() const;
  const PropId& prop() const;          // Atom
  const AgentId& agent() const;        // Knows
  const Formula& lhs() const;          // And
  const Formula& rhs() const;          // And
  const Formula& sub() const;          // Not, Knows, Box
  const ProcessTerm& program() const;  // Box

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }
  std::size_t hash() const;

 private:
  struct Node;
  static Formula make(Kind kind, PropId prop, AgentId agent, std::vector<Formula> children,
                      std::shared_ptr<const ProcessTerm> program);
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// One step a process can perform: a named action model, a channel endpoint,
// a synchronization, or an inline pointed action model (used by composed
// preconditions and rewrite bookkeeping; never produced by the parser).
class ActionRef {
 public:
  enum class Kind { Model, Input, Output, Tau, Embedded };

  static ActionRef model(std::string name);
  static ActionRef input(ChannelId channel);
  static ActionRef output(ChannelId channel, Formula payload);
  static ActionRef tau(AgentId sender, AgentId receiver, Formula payload);
  static ActionRef embedded(std::shared_ptr<const PointedActionModel> value);

  Kind kind() const;
  bool is_channel() const;  // Input or Output
  const std::string& name() const;     // Model
  const ChannelId& channel() const;    // Input, Output
  const Formula& payload() const;      // Output, Tau
  const AgentId& sender() const;       // Tau
  const AgentId& receiver() const;     // Tau
  const std::shared_ptr<const PointedActionModel>& value() const;  // Embedded

  bool operator==(const ActionRef& other) const;
  bool operator!=(const ActionRef& other) const { return !(*this == other); }
  std::size_t hash() const;

 private:
  struct Node;
  static ActionRef make(Kind kind, std::string name, ChannelId channel, AgentId sender,
                        AgentId receiver, std::shared_ptr<const Formula> payload,
                        std::shared_ptr<const PointedActionModel> value);
  explicit ActionRef(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class ProcessTerm {
 public:
  enum class Kind { Act, Prefix, Seq, Choice, Parallel, Done, Nil };

  using Branch = std::pair<AgentId, ProcessTerm>;

  static ProcessTerm act(ActionRef action);
  static ProcessTerm prefix(ActionRef action, ProcessTerm rest);
  static ProcessTerm seq(ProcessTerm first, ProcessTerm second);
  static ProcessTerm choice(ProcessTerm left, ProcessTerm right);
  static ProcessTerm parallel(std::vector<Branch> branches);
  static ProcessTerm done();
  static ProcessTerm nil();

  Kind kind() const;
  const ActionRef& action() const;       // Act, Prefix
  const ProcessTerm& rest() const;       // Prefix
  const ProcessTerm& first() const;      // Seq
  const ProcessTerm& second() const;     // Seq
  const ProcessTerm& left() const;       // Choice
  const ProcessTerm& right() const;      // Choice
  const std::vector<Branch>& branches() const;  // Parallel

  bool contains_parallel() const;
  bool contains_channel_action() const;

  bool operator==(const ProcessTerm& other) const;
  bool operator!=(const ProcessTerm& other) const { return !(*this == other); }
  std::size_t hash() const;

 private:
  struct Node;
  static ProcessTerm make(Kind kind, std::shared_ptr<const ActionRef> action,
                          std::vector<ProcessTerm> children, std::vector<Branch> branches);
  explicit ProcessTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};
struct ProcessTermHash {
  std::size_t operator()(const ProcessTerm& t) const { return t.hash(); }
};
struct ActionRefHash {
  std::size_t operator()(const ActionRef& a) const { return a.hash(); }
};

}  // namespace delwca
