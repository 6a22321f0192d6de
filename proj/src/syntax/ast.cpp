#include "tpdl/syntax/ast.hpp"

#include <utility>
#include <vector>

#include "tpdl/error.hpp"

namespace tpdl::syntax {

struct Program::Node {
  Kind kind;
  std::string agent;
  std::vector<Program> children;
};

struct Formula::Node {
  Kind kind;
  std::string name;
  std::vector<Program> program;  // zero or one element
  std::vector<Formula> children;
};

struct PltlFormula::Node {
  Kind kind;
  std::string name;
  std::vector<PltlFormula> children;
};

namespace {

template <class Children>
const auto& child(const Children& children, std::size_t i, const char* what) {
  if (i >= children.size()) throw PreconditionError(std::string("node has no ") + what);
  return children[i];
}

}  // namespace

// --- Program ---------------------------------------------------------------

Program Program::atom(std::string agent) {
  return Program(std::make_shared<const Node>(Node{Kind::Atom, std::move(agent), {}}));
}
Program Program::seq(Program first, Program second) {
  return Program(std::make_shared<const Node>(Node{Kind::Seq, {}, {std::move(first), std::move(second)}}));
}
Program Program::choice(Program left, Program right) {
  return Program(std::make_shared<const Node>(Node{Kind::Union, {}, {std::move(left), std::move(right)}}));
}
Program Program::star(Program body) {
  return Program(std::make_shared<const Node>(Node{Kind::Star, {}, {std::move(body)}}));
}

Program::Kind Program::kind() const noexcept { return node_->kind; }

const std::string& Program::agent() const {
  if (node_->kind != Kind::Atom) throw PreconditionError("program is not an agent");
  return node_->agent;
}
const Program& Program::left() const { return child(node_->children, 0, "left operand"); }
const Program& Program::right() const { return child(node_->children, 1, "right operand"); }
const Program& Program::body() const {
  if (node_->kind != Kind::Star) throw PreconditionError("program is not an iteration");
  return node_->children[0];
}

bool operator==(const Program& lhs, const Program& rhs) {
  if (lhs.node_ == rhs.node_) return true;
  if (lhs.node_->kind != rhs.node_->kind || lhs.node_->agent != rhs.node_->agent) return false;
  return lhs.node_->children == rhs.node_->children;
}

// --- Formula ---------------------------------------------------------------

Formula Formula::top() { return Formula(std::make_shared<const Node>(Node{Kind::True, {}, {}, {}})); }
Formula Formula::bottom() { return Formula(std::make_shared<const Node>(Node{Kind::False, {}, {}, {}})); }
Formula Formula::prop(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Kind::Prop, std::move(name), {}, {}}));
}
Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {}, {std::move(operand)}}));
}
Formula Formula::conj(Formula left, Formula right) {
  return Formula(std::make_shared<const Node>(Node{Kind::And, {}, {}, {std::move(left), std::move(right)}}));
}
Formula Formula::disj(Formula left, Formula right) {
  return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, {}, {std::move(left), std::move(right)}}));
}
Formula Formula::implies(Formula left, Formula right) {
  return Formula(std::make_shared<const Node>(Node{Kind::Implies, {}, {}, {std::move(left), std::move(right)}}));
}
Formula Formula::diamond(Program program, Formula operand) {
  return Formula(std::make_shared<const Node>(Node{Kind::Diamond, {}, {std::move(program)}, {std::move(operand)}}));
}
Formula Formula::box(Program program, Formula operand) {
  return Formula(std::make_shared<const Node>(Node{Kind::Box, {}, {std::move(program)}, {std::move(operand)}}));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::name() const {
  if (node_->kind != Kind::Prop) throw PreconditionError("formula is not an atom");
  return node_->name;
}
const Program& Formula::program() const { return child(node_->program, 0, "program"); }
const Formula& Formula::operand() const {
  if (node_->children.size() != 1) throw PreconditionError("formula is not unary");
  return node_->children[0];
}
const Formula& Formula::left() const { return child(node_->children, 0, "left operand"); }
const Formula& Formula::right() const { return child(node_->children, 1, "right operand"); }

bool operator==(const Formula& lhs, const Formula& rhs) {
  if (lhs.node_ == rhs.node_) return true;
  const auto& a = *lhs.node_;
  const auto& b = *rhs.node_;
  return a.kind == b.kind && a.name == b.name && a.program == b.program && a.children == b.children;
}

// --- PltlFormula -----------------------------------------------------------

PltlFormula PltlFormula::top() { return PltlFormula(std::make_shared<const Node>(Node{Kind::True, {}, {}})); }
PltlFormula PltlFormula::bottom() { return PltlFormula(std::make_shared<const Node>(Node{Kind::False, {}, {}})); }
PltlFormula PltlFormula::prop(std::string name) {
  return PltlFormula(std::make_shared<const Node>(Node{Kind::Prop, std::move(name), {}}));
}

#define TPDL_PLTL_UNARY(fn, K)                                                            \
  PltlFormula PltlFormula::fn(PltlFormula operand) {                                      \
    return PltlFormula(std::make_shared<const Node>(Node{Kind::K, {}, {std::move(operand)}})); \
  }
#define TPDL_PLTL_BINARY(fn, K)                                                                        \
  PltlFormula PltlFormula::fn(PltlFormula left, PltlFormula right) {                                   \
    return PltlFormula(std::make_shared<const Node>(Node{Kind::K, {}, {std::move(left), std::move(right)}})); \
  }

TPDL_PLTL_UNARY(negation, Not)
TPDL_PLTL_UNARY(next, Next)
TPDL_PLTL_UNARY(yesterday, Yesterday)
TPDL_PLTL_UNARY(future, Future)
TPDL_PLTL_UNARY(past, Past)
TPDL_PLTL_BINARY(conj, And)
TPDL_PLTL_BINARY(disj, Or)
TPDL_PLTL_BINARY(implies, Implies)

#undef TPDL_PLTL_UNARY
#undef TPDL_PLTL_BINARY

PltlFormula::Kind PltlFormula::kind() const noexcept { return node_->kind; }

const std::string& PltlFormula::name() const {
  if (node_->kind != Kind::Prop) throw PreconditionError("formula is not an atom");
  return node_->name;
}
const PltlFormula& PltlFormula::operand() const {
  if (node_->children.size() != 1) throw PreconditionError("formula is not unary");
  return node_->children[0];
}
const PltlFormula& PltlFormula::left() const { return child(node_->children, 0, "left operand"); }
const PltlFormula& PltlFormula::right() const { return child(node_->children, 1, "right operand"); }

bool operator==(const PltlFormula& lhs, const PltlFormula& rhs) {
  if (lhs.node_ == rhs.node_) return true;
  return lhs.node_->kind == rhs.node_->kind && lhs.node_->name == rhs.node_->name &&
         lhs.node_->children == rhs.node_->children;
}

// --- queries ---------------------------------------------------------------

namespace {

void collect_agents(const Program& p, std::set<std::string>& out) {
  switch (p.kind()) {
    case Program::Kind::Atom: out.insert(p.agent()); break;
    case Program::Kind::Star: collect_agents(p.body(), out); break;
    default:
      collect_agents(p.left(), out);
      collect_agents(p.right(), out);
  }
}

void collect(const Formula& f, std::set<std::string>* atoms, std::set<std::string>* agents) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False: return;
    case K::Prop:
      if (atoms) atoms->insert(f.name());
      return;
    case K::Not: collect(f.operand(), atoms, agents); return;
    case K::Diamond:
    case K::Box:
      if (agents) collect_agents(f.program(), *agents);
      collect(f.operand(), atoms, agents);
      return;
    default:
      collect(f.left(), atoms, agents);
      collect(f.right(), atoms, agents);
  }
}

void collect(const PltlFormula& f, std::set<std::string>& atoms) {
  using K = PltlFormula::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False: return;
    case K::Prop: atoms.insert(f.name()); return;
    case K::And:
    case K::Or:
    case K::Implies:
      collect(f.left(), atoms);
      collect(f.right(), atoms);
      return;
    default: collect(f.operand(), atoms);
  }
}

std::size_t program_size(const Program& p) {
  switch (p.kind()) {
    case Program::Kind::Atom: return 1;
    case Program::Kind::Star: return 1 + program_size(p.body());
    default: return 1 + program_size(p.left()) + program_size(p.right());
  }
}

}  // namespace

std::set<std::string> agents_of(const Program& p) {
  std::set<std::string> out;
  collect_agents(p, out);
  return out;
}

std::set<std::string> agents_of(const Formula& f) {
  std::set<std::string> out;
  collect(f, nullptr, &out);
  return out;
}

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  collect(f, &out, nullptr);
  return out;
}

std::set<std::string> atoms_of(const PltlFormula& f) {
  std::set<std::string> out;
  collect(f, out);
  return out;
}

std::size_t size_of(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False:
    case K::Prop: return 1;
    case K::Not: return 1 + size_of(f.operand());
    case K::Diamond:
    case K::Box: return 1 + program_size(f.program()) + size_of(f.operand());
    default: return 1 + size_of(f.left()) + size_of(f.right());
  }
}

std::size_t size_of(const PltlFormula& f) {
  using K = PltlFormula::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False:
    case K::Prop: return 1;
    case K::And:
    case K::Or:
    case K::Implies: return 1 + size_of(f.left()) + size_of(f.right());
    default: return 1 + size_of(f.operand());
  }
}

}  // namespace tpdl::syntax
