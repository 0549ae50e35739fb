#include "delwca/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "delwca/action_model.hpp"
#include "delwca/kripke.hpp"

namespace delwca {
namespace {

std::string location(int line, int col) {
  std::ostringstream os;
  os << "line " << line << ", col " << col << ": ";
  return os.str();
}

enum class Tok {
  Ident,
  Tilde,
  Amp,
  Bar,
  BarBar,
  Arrow,
  LParen,
  RParen,
  LBrack,
  RBrack,
  Less,
  Greater,
  Dot,
  Semi,
  Plus,
  Bang,
  Quest,
  Comma,
  Colon,
  End,
};

struct Token {
  Tok type;
  std::string text;
  int col;  // 1-based column in the original line
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> lex(const std::string& s, int line, int col_offset) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    int col = col_offset + static_cast<int>(i) + 1;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#') break;
    if (ident_char(c)) {
      size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), col});
      i = j;
      continue;
    }
    switch (c) {
      case '~': out.push_back({Tok::Tilde, "~", col}); break;
      case '&': out.push_back({Tok::Amp, "&", col}); break;
      case '|':
        if (i + 1 < s.size() && s[i + 1] == '|') {
          out.push_back({Tok::BarBar, "||", col});
          ++i;
        } else {
          out.push_back({Tok::Bar, "|", col});
        }
        break;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          out.push_back({Tok::Arrow, "->", col});
          ++i;
        } else {
          throw ParseError(location(line, col) + "stray '-' (did you mean '->'?)", line, col);
        }
        break;
      case '(': out.push_back({Tok::LParen, "(", col}); break;
      case ')': out.push_back({Tok::RParen, ")", col}); break;
      case '[': out.push_back({Tok::LBrack, "[", col}); break;
      case ']': out.push_back({Tok::RBrack, "]", col}); break;
      case '<': out.push_back({Tok::Less, "<", col}); break;
      case '>': out.push_back({Tok::Greater, ">", col}); break;
      case '.': out.push_back({Tok::Dot, ".", col}); break;
      case ';': out.push_back({Tok::Semi, ";", col}); break;
      case '+': out.push_back({Tok::Plus, "+", col}); break;
      case '!': out.push_back({Tok::Bang, "!", col}); break;
      case '?': out.push_back({Tok::Quest, "?", col}); break;
      case ',': out.push_back({Tok::Comma, ",", col}); break;
      case ':': out.push_back({Tok::Colon, ":", col}); break;
      default:
        throw ParseError(location(line, col) + "unexpected character '" + std::string(1, c) + "'",
                         line, col);
    }
    ++i;
  }
  out.push_back({Tok::End, "", col_offset + static_cast<int>(s.size()) + 1});
  return out;
}

const char* kReserved[] = {"true", "false", "done", "par", "0", "id", "all", "tau"};

bool is_reserved(const std::string& name) {
  for (const char* r : kReserved)
    if (name == r) return true;
  return false;
}

// Recursive-descent parser over one token stream. Formulas and programs are
// mutually recursive through modalities and output payloads.
class Parser {
 public:
  Parser(std::vector<Token> toks, const Scenario& sc, int line)
      : toks_(std::move(toks)), sc_(sc), line_(line) {}

  Formula parse_formula_all() {
    Formula f = formula();
    expect_end();
    return f;
  }

  ProcessTerm parse_program_all(bool eta_only) {
    ProcessTerm t = program_top(eta_only);
    expect_end();
    return t;
  }

 private:
  std::vector<Token> toks_;
  const Scenario& sc_;
  int line_;
  size_t pos_ = 0;

  const Token& cur() const { return toks_[pos_]; }
  void advance() {
    if (cur().type != Tok::End) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(location(line_, cur().col) + msg, line_, cur().col);
  }

  bool accept(Tok t) {
    if (cur().type != t) return false;
    advance();
    return true;
  }

  void expect(Tok t, const char* what) {
    if (!accept(t)) fail(std::string("expected ") + what);
  }

  void expect_end() {
    if (cur().type != Tok::End) fail("unexpected trailing input '" + cur().text + "'");
  }

  bool is_knowledge_ident(const std::string& s) const {
    return s.size() > 1 && s[0] == 'K' && sc_.has_agent(s.substr(1));
  }

  // formula := or ('->' formula)?   (right-associative)
  Formula formula() {
    Formula lhs = formula_or();
    if (accept(Tok::Arrow)) return Formula::implication(lhs, formula());
    return lhs;
  }

  Formula formula_or() {
    Formula f = formula_and();
    while (accept(Tok::Bar)) f = Formula::disjunction(f, formula_and());
    return f;
  }

  Formula formula_and() {
    Formula f = formula_unary();
    while (accept(Tok::Amp)) f = Formula::conjunction(f, formula_unary());
    return f;
  }

  Formula formula_unary() {
    switch (cur().type) {
      case Tok::Tilde:
        advance();
        return Formula::negation(formula_unary());
      case Tok::LBrack: {
        advance();
        ProcessTerm p = program_top(false);
        expect(Tok::RBrack, "']'");
        return Formula::box(p, formula_unary());
      }
      case Tok::Less: {
        advance();
        ProcessTerm p = program_top(false);
        expect(Tok::Greater, "'>'");
        return Formula::diamond(p, formula_unary());
      }
      case Tok::Ident:
        if (is_knowledge_ident(cur().text)) {
          std::string agent = cur().text.substr(1);
          advance();
          return Formula::knows(agent, formula_unary());
        }
        return formula_primary();
      case Tok::LParen:
        return formula_primary();
      default:
        fail("expected a formula");
    }
  }

  Formula formula_primary() {
    if (accept(Tok::LParen)) {
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (cur().type != Tok::Ident) fail("expected a formula");
    std::string name = cur().text;
    if (name == "true") {
      advance();
      return Formula::top();
    }
    if (name == "false") {
      advance();
      return Formula::negation(Formula::top());
    }
    if (!sc_.has_prop(name)) fail("unknown proposition: " + name);
    advance();
    return Formula::atom(name);
  }

  // program := choice ('||' choice)*; parallel composition and the 'par'
  // keyword are only legal as the whole program expression.
  ProcessTerm program_top(bool eta_only) {
    if (cur().type == Tok::Ident && cur().text == "par") {
      if (eta_only) fail("'par' is not allowed in a proc body");
      advance();
      return sc_.parallel_program();
    }
    ProcessTerm first = program_choice(eta_only);
    if (cur().type != Tok::BarBar) return first;
    if (eta_only) fail("'||' is not allowed in a proc body");
    std::vector<ProcessTerm> branches{first};
    while (accept(Tok::BarBar)) branches.push_back(program_choice(eta_only));
    if (branches.size() != sc_.agents.size()) {
      std::ostringstream os;
      os << "parallel composition needs one branch per agent (" << sc_.agents.size()
         << " declared, " << branches.size() << " given)";
      fail(os.str());
    }
    std::vector<ProcessTerm::Branch> out;
    for (size_t i = 0; i < branches.size(); ++i) out.emplace_back(sc_.agents[i], branches[i]);
    return ProcessTerm::parallel(out);
  }

  ProcessTerm program_choice(bool eta_only) {
    ProcessTerm t = program_seq(eta_only);
    while (accept(Tok::Plus)) t = ProcessTerm::choice(t, program_seq(eta_only));
    return t;
  }

  ProcessTerm program_seq(bool eta_only) {
    ProcessTerm t = program_prefix(eta_only);
    while (accept(Tok::Semi)) t = ProcessTerm::seq(t, program_prefix(eta_only));
    return t;
  }

  // prefix := action '.' prefix | primary. A '.' may only follow a bare
  // action, so '(a+b).c' is rejected rather than silently reassociated.
  ProcessTerm program_prefix(bool eta_only) {
    if (cur().type == Tok::Ident && cur().text != "0" && cur().text != "done" &&
        cur().text != "par") {
      ActionRef a = action();
      if (accept(Tok::Dot)) return ProcessTerm::prefix(a, program_prefix(eta_only));
      return ProcessTerm::act(a);
    }
    ProcessTerm t = program_primary(eta_only);
    if (cur().type == Tok::Dot) fail("prefix head must be a single action");
    return t;
  }

  ProcessTerm program_primary(bool eta_only) {
    if (cur().type == Tok::Ident) {
      if (cur().text == "0") {
        advance();
        return ProcessTerm::nil();
      }
      if (cur().text == "done") {
        advance();
        return ProcessTerm::done();
      }
      if (cur().text == "par") fail("'par' is only allowed as the whole program");
      return ProcessTerm::act(action());
    }
    if (accept(Tok::LParen)) {
      ProcessTerm t = program_choice(eta_only);
      if (cur().type == Tok::BarBar)
        fail("'||' is only allowed at the top level of a program");
      expect(Tok::RParen, "')'");
      return t;
    }
    fail("expected a program");
  }

  // action := NAME | CHANNEL '!' '(' formula ')' | CHANNEL '?'
  //         | 'tau' '[' AGENT '->' AGENT ']' '(' formula ')'
  ActionRef action() {
    std::string name = cur().text;
    int col = cur().col;
    advance();
    if (name == "tau") {
      expect(Tok::LBrack, "'['");
      std::string sender = ident("sender agent");
      expect(Tok::Arrow, "'->'");
      std::string receiver = ident("receiver agent");
      expect(Tok::RBrack, "']'");
      expect(Tok::LParen, "'('");
      Formula payload = formula();
      expect(Tok::RParen, "')'");
      if (!sc_.has_agent(sender))
        throw ParseError(location(line_, col) + "unknown agent: " + sender, line_, col);
      if (!sc_.has_agent(receiver))
        throw ParseError(location(line_, col) + "unknown agent: " + receiver, line_, col);
      if (sender == receiver)
        throw ParseError(location(line_, col) + "tau sender and receiver must differ", line_, col);
      return ActionRef::tau(sender, receiver, payload);
    }
    if (accept(Tok::Bang)) {
      if (!sc_.has_channel(name))
        throw ParseError(location(line_, col) + "unknown channel: " + name, line_, col);
      expect(Tok::LParen, "'('");
      Formula payload = formula();
      expect(Tok::RParen, "')'");
      return ActionRef::output(name, payload);
    }
    if (accept(Tok::Quest)) {
      if (!sc_.has_channel(name))
        throw ParseError(location(line_, col) + "unknown channel: " + name, line_, col);
      return ActionRef::input(name);
    }
    if (!sc_.has_action_model(name))
      throw ParseError(location(line_, col) + "unknown action model: " + name, line_, col);
    return ActionRef::model(name);
  }

  std::string ident(const char* what) {
    if (cur().type != Tok::Ident) fail(std::string("expected ") + what);
    std::string s = cur().text;
    advance();
    return s;
  }
};

// ---------------------------------------------------------------------------
// Scenario files
// ---------------------------------------------------------------------------

struct Line {
  int no;
  std::string text;  // comment-stripped, trimmed
};

std::string strip(const std::string& s) {
  size_t hash = s.find('#');
  std::string t = hash == std::string::npos ? s : s.substr(0, hash);
  size_t b = t.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = t.find_last_not_of(" \t\r");
  return t.substr(b, e - b + 1);
}

// One keyword-introduced declaration, e.g. "rel a: u v, v w" or "query: ...".
struct Decl {
  int no;
  std::string keyword;  // "agents", "rel", "channel", ...
  std::string arg;      // identifier between keyword and ':', if any
  std::string body;     // text after ':'
  int body_col;         // 1-based column where body starts
};

struct AmBlock {
  int no;
  std::string name;
  std::vector<Decl> decls;
};

// Splits "keyword [arg] : body"; returns false if the line has no ':'.
bool split_decl(const Line& ln, Decl& out) {
  size_t colon = ln.text.find(':');
  if (colon == std::string::npos) return false;
  std::istringstream head(ln.text.substr(0, colon));
  std::string kw, arg, extra;
  head >> kw >> arg >> extra;
  if (kw.empty() || !extra.empty()) return false;
  out.no = ln.no;
  out.keyword = kw;
  out.arg = arg;
  out.body = ln.text.substr(colon + 1);
  out.body_col = static_cast<int>(colon) + 2;
  return true;
}

class ScenarioBuilder {
 public:
  explicit ScenarioBuilder(const std::string& text) { collect(text); }

  Scenario build() {
    do_agents();
    do_props();
    do_channels();
    do_model();
    do_action_models();
    do_procs();
    do_queries();
    return sc_;
  }

 private:
  Scenario sc_;
  std::vector<Decl> agents_, props_, channels_, states_, inits_, vals_, rels_, procs_, queries_;
  std::vector<AmBlock> am_blocks_;
  bool s5_ = false;
  int s5_line_ = 0;

  [[noreturn]] static void fail(const std::string& msg, int line, int col = 1) {
    throw ParseError(location(line, col) + msg, line, col);
  }

  void collect(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    AmBlock* open_block = nullptr;
    while (std::getline(in, raw)) {
      ++no;
      Line ln{no, strip(raw)};
      if (ln.text.empty()) continue;
      if (ln.text == "end") {
        if (!open_block) fail("'end' outside an actionmodel block", no);
        open_block = nullptr;
        continue;
      }
      Decl d;
      bool has_colon = split_decl(ln, d);
      if (open_block) {
        if (!has_colon) fail("unrecognized line in actionmodel block", no);
        if (d.keyword != "points" && d.keyword != "init" && d.keyword != "pre" &&
            d.keyword != "rel")
          fail("unrecognized actionmodel directive '" + d.keyword + "'", no);
        open_block->decls.push_back(d);
        continue;
      }
      if (ln.text == "s5") {
        s5_ = true;
        s5_line_ = no;
        continue;
      }
      if (ln.text == "tau-reflexive") {
        sc_.tau_reflexive = true;
        continue;
      }
      if (!has_colon) fail("unrecognized line '" + ln.text + "'", no);
      if (d.keyword == "actionmodel") {
        if (d.arg.empty()) fail("actionmodel needs a name", no);
        if (!strip(d.body).empty()) fail("actionmodel header takes no body", no);
        am_blocks_.push_back({no, d.arg, {}});
        open_block = &am_blocks_.back();
        continue;
      }
      if (d.keyword == "agents") agents_.push_back(d);
      else if (d.keyword == "props") props_.push_back(d);
      else if (d.keyword == "channel") channels_.push_back(d);
      else if (d.keyword == "states") states_.push_back(d);
      else if (d.keyword == "init") inits_.push_back(d);
      else if (d.keyword == "val") vals_.push_back(d);
      else if (d.keyword == "rel") rels_.push_back(d);
      else if (d.keyword == "proc") procs_.push_back(d);
      else if (d.keyword == "query") queries_.push_back(d);
      else fail("unrecognized declaration '" + d.keyword + "'", no);
    }
    if (open_block) fail("actionmodel block not closed with 'end'", open_block->no);
  }

  std::vector<std::string> idents_of(const Decl& d, bool allow_comma = false) {
    std::vector<std::string> out;
    for (const Token& t : lex(d.body, d.no, d.body_col - 1)) {
      if (t.type == Tok::End) break;
      if (allow_comma && t.type == Tok::Comma) continue;
      if (t.type != Tok::Ident) fail("expected identifiers", d.no, t.col);
      out.push_back(t.text);
    }
    return out;
  }

  void check_name(const std::string& name, const char* kind, int line) {
    if (is_reserved(name)) fail(std::string(kind) + " name '" + name + "' is reserved", line);
  }

  void do_agents() {
    if (agents_.empty()) fail("missing 'agents:' declaration", 1);
    for (const Decl& d : agents_) {
      if (!d.arg.empty()) fail("unexpected token before ':'", d.no);
      for (const std::string& a : idents_of(d)) {
        check_name(a, "agent", d.no);
        if (sc_.has_agent(a)) fail("duplicate agent '" + a + "'", d.no);
        sc_.agents.push_back(a);
      }
    }
    if (sc_.agents.empty()) fail("at least one agent is required", agents_.front().no);
  }

  void do_props() {
    for (const Decl& d : props_) {
      if (!d.arg.empty()) fail("unexpected token before ':'", d.no);
      for (const std::string& p : idents_of(d)) {
        check_name(p, "prop", d.no);
        if (p.size() > 1 && p[0] == 'K' && sc_.has_agent(p.substr(1)))
          fail("prop name '" + p + "' conflicts with the knowledge operator K" + p.substr(1),
               d.no);
        if (sc_.has_prop(p)) fail("duplicate prop '" + p + "'", d.no);
        if (sc_.has_agent(p)) fail("prop '" + p + "' is already an agent name", d.no);
        sc_.props.push_back(p);
      }
    }
  }

  void do_channels() {
    for (const Decl& d : channels_) {
      if (d.arg.empty()) fail("channel needs a name: 'channel NAME: A -> B'", d.no);
      check_name(d.arg, "channel", d.no);
      if (sc_.has_channel(d.arg)) fail("duplicate channel '" + d.arg + "'", d.no);
      auto toks = lex(d.body, d.no, d.body_col - 1);
      if (toks.size() != 4 || toks[0].type != Tok::Ident || toks[1].type != Tok::Arrow ||
          toks[2].type != Tok::Ident)
        fail("expected 'channel " + d.arg + ": SENDER -> RECEIVER'", d.no, d.body_col);
      const std::string& from = toks[0].text;
      const std::string& to = toks[2].text;
      if (!sc_.has_agent(from)) fail("unknown agent: " + from, d.no, toks[0].col);
      if (!sc_.has_agent(to)) fail("unknown agent: " + to, d.no, toks[2].col);
      if (from == to) fail("channel endpoints must be distinct agents", d.no, toks[2].col);
      sc_.channels[d.arg] = Channel{d.arg, from, to};
    }
  }

  // Parses "u v, v w" | "id" | "all" into explicit pairs over `names`.
  std::set<StatePair> relation_pairs(const Decl& d, const std::vector<std::string>& names) {
    auto toks = lex(d.body, d.no, d.body_col - 1);
    auto index = [&](const Token& t) -> int {
      auto it = std::find(names.begin(), names.end(), t.text);
      if (it == names.end()) fail("unknown state '" + t.text + "'", d.no, t.col);
      return static_cast<int>(it - names.begin());
    };
    std::set<StatePair> pairs;
    int n = static_cast<int>(names.size());
    if (toks.size() == 2 && toks[0].type == Tok::Ident &&
        (toks[0].text == "id" || toks[0].text == "all")) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (toks[0].text == "all" || i == j) pairs.insert({i, j});
      return pairs;
    }
    size_t i = 0;
    while (toks[i].type != Tok::End) {
      if (toks[i].type != Tok::Ident || toks[i + 1].type != Tok::Ident)
        fail("expected 'STATE STATE' pairs separated by commas", d.no, toks[i].col);
      pairs.insert({index(toks[i]), index(toks[i + 1])});
      i += 2;
      if (toks[i].type == Tok::Comma) ++i;
      else if (toks[i].type != Tok::End)
        fail("expected ',' between relation pairs", d.no, toks[i].col);
    }
    return pairs;
  }

  void do_model() {
    EpistemicModel& m = sc_.model.model;
    m.agents = sc_.agents;
    for (const Decl& d : states_) {
      if (!d.arg.empty()) fail("unexpected token before ':'", d.no);
      for (const std::string& s : idents_of(d)) {
        check_name(s, "state", d.no);
        if (m.index_of(s) >= 0) fail("duplicate state '" + s + "'", d.no);
        m.states.push_back(s);
      }
    }
    if (m.states.empty()) fail("missing 'states:' declaration", 1);
    if (inits_.empty()) fail("missing 'init:' declaration", 1);
    if (inits_.size() > 1) fail("duplicate 'init:' declaration", inits_[1].no);
    {
      auto ids = idents_of(inits_[0]);
      if (ids.size() != 1) fail("init takes exactly one state", inits_[0].no);
      int idx = m.index_of(ids[0]);
      if (idx < 0) fail("unknown state '" + ids[0] + "'", inits_[0].no);
      sc_.model.point = idx;
    }
    for (const Decl& d : vals_) {
      auto ids = idents_of(d);
      if (ids.empty()) fail("val needs a state", d.no);
      int s = m.index_of(ids[0]);
      if (s < 0) fail("unknown state '" + ids[0] + "'", d.no);
      for (size_t i = 1; i < ids.size(); ++i) {
        if (!sc_.has_prop(ids[i])) fail("unknown prop '" + ids[i] + "'", d.no);
        m.valuation[ids[i]].insert(s);
      }
    }
    for (const Decl& d : rels_) {
      if (d.arg.empty()) fail("rel needs an agent: 'rel AGENT: ...'", d.no);
      if (!sc_.has_agent(d.arg)) fail("unknown agent: " + d.arg, d.no);
      auto pairs = relation_pairs(d, m.states);
      m.relations[d.arg].insert(pairs.begin(), pairs.end());
    }
    if (s5_) {
      int n = static_cast<int>(m.states.size());
      for (const AgentId& a : sc_.agents) {
        std::set<StatePair> r = m.relations.count(a) ? m.relations[a] : std::set<StatePair>{};
        for (int i = 0; i < n; ++i) r.insert({i, i});
        m.relations[a] = equivalence_closure(r, n);
      }
    }
  }

  void do_action_models() {
    for (const AmBlock& b : am_blocks_) {
      check_name(b.name, "actionmodel", b.no);
      if (sc_.has_action_model(b.name)) fail("duplicate actionmodel '" + b.name + "'", b.no);
      if (sc_.has_channel(b.name))
        fail("actionmodel '" + b.name + "' is already a channel name", b.no);
      ActionModel am;
      int init = -1;
      std::map<std::string, Formula> pres;
      for (const Decl& d : b.decls) {
        if (d.keyword == "points") {
          for (const std::string& p : idents_of(d)) {
            check_name(p, "point", d.no);
            if (am.index_of(p) >= 0) fail("duplicate point '" + p + "'", d.no);
            am.points.push_back(p);
          }
        }
      }
      if (am.points.empty()) fail("actionmodel '" + b.name + "' has no points", b.no);
      for (const Decl& d : b.decls) {
        if (d.keyword == "points") continue;
        if (d.keyword == "init") {
          if (init >= 0) fail("duplicate init in actionmodel '" + b.name + "'", d.no);
          auto ids = idents_of(d);
          if (ids.size() != 1) fail("init takes exactly one point", d.no);
          init = am.index_of(ids[0]);
          if (init < 0) fail("unknown point '" + ids[0] + "'", d.no);
        } else if (d.keyword == "pre") {
          if (d.arg.empty()) fail("pre needs a point: 'pre POINT: FORMULA'", d.no);
          if (am.index_of(d.arg) < 0) fail("unknown point '" + d.arg + "'", d.no);
          if (pres.count(d.arg)) fail("duplicate pre for point '" + d.arg + "'", d.no);
          Parser fp(lex(d.body, d.no, d.body_col - 1), sc_, d.no);
          Formula f = fp.parse_formula_all();
          if (contains_box(f)) fail("preconditions must be program-free", d.no, d.body_col);
          pres.emplace(d.arg, f);
        } else {  // rel
          if (d.arg.empty()) fail("rel needs an agent: 'rel AGENT: ...'", d.no);
          if (!sc_.has_agent(d.arg)) fail("unknown agent: " + d.arg, d.no);
          auto pairs = relation_pairs(d, am.points);
          am.relations[d.arg].insert(pairs.begin(), pairs.end());
        }
      }
      if (init < 0) init = 0;  // default to the first declared point
      for (const std::string& p : am.points) {
        auto it = pres.find(p);
        am.pre.push_back(it == pres.end() ? Formula::top() : it->second);
      }
      sc_.action_models.emplace(b.name, PointedActionModel{std::move(am), init});
    }
  }

  static bool contains_box(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Top:
      case Formula::Kind::Atom:
        return false;
      case Formula::Kind::Not:
      case Formula::Kind::Knows:
        return contains_box(f.sub());
      case Formula::Kind::And:
        return contains_box(f.lhs()) || contains_box(f.rhs());
      case Formula::Kind::Box:
        return true;
    }
    return false;
  }

  void do_procs() {
    for (const Decl& d : procs_) {
      if (d.arg.empty()) fail("proc needs an agent: 'proc AGENT: PROGRAM'", d.no);
      if (!sc_.has_agent(d.arg)) fail("unknown agent: " + d.arg, d.no);
      if (sc_.programs.count(d.arg)) fail("duplicate proc for agent '" + d.arg + "'", d.no);
      Parser pp(lex(d.body, d.no, d.body_col - 1), sc_, d.no);
      sc_.programs.emplace(d.arg, pp.parse_program_all(true));
    }
  }

  void do_queries() {
    for (const Decl& d : queries_) {
      if (!d.arg.empty()) fail("unexpected token before ':'", d.no);
      Parser fp(lex(d.body, d.no, d.body_col - 1), sc_, d.no);
      sc_.queries.push_back(fp.parse_formula_all());
    }
  }
};

}  // namespace

ParseError::ParseError(const std::string& msg, int line, int col)
    : std::runtime_error(msg), line(line), col(col) {}

Formula parse_formula(const std::string& text, const Scenario& sc) {
  Parser p(lex(text, 1, 0), sc, 1);
  return p.parse_formula_all();
}

ProcessTerm parse_program(const std::string& text, const Scenario& sc) {
  Parser p(lex(text, 1, 0), sc, 1);
  return p.parse_program_all(false);
}

Scenario parse_scenario(const std::string& text) { return ScenarioBuilder(text).build(); }

Scenario parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path, 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace delwca
