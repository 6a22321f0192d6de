#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>

namespace tpdl::syntax {

/// A program of the dynamic language: an agent, a composition, a union or an
/// iteration. Programs are immutable and share structure; copies are cheap.
class Program {
 public:
  enum class Kind { Atom, Seq, Union, Star };

  static Program atom(std::string agent);
  static Program seq(Program first, Program second);
  static Program choice(Program left, Program right);
  static Program star(Program body);

  Kind kind() const noexcept;
  /// Agent name; only valid for Kind::Atom.
  const std::string& agent() const;
  /// Operands of Seq / Union.
  const Program& left() const;
  const Program& right() const;
  /// Operand of Star.
  const Program& body() const;

  friend bool operator==(const Program& lhs, const Program& rhs);

 private:
  struct Node;
  explicit Program(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// A formula of the dynamic language. Box, Or and Implies are stored as their
/// own nodes so that printing preserves the shape the user wrote.
class Formula {
 public:
  enum class Kind { True, False, Prop, Not, And, Or, Implies, Diamond, Box };

  static Formula top();
  static Formula bottom();
  static Formula prop(std::string name);
  static Formula negation(Formula operand);
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);
  static Formula implies(Formula left, Formula right);
  static Formula diamond(Program program, Formula operand);
  static Formula box(Program program, Formula operand);

  Kind kind() const noexcept;
  const std::string& name() const;
  const Program& program() const;
  /// Operand of Not / Diamond / Box.
  const Formula& operand() const;
  const Formula& left() const;
  const Formula& right() const;

  /// Stable address of the underlying node; equal for copies of one formula.
  const void* identity() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& lhs, const Formula& rhs);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// A formula of linear temporal logic with past: X (next), Y (yesterday),
/// F (some time in the future, reflexively) and P (some time in the past).
class PltlFormula {
 public:
  enum class Kind { True, False, Prop, Not, And, Or, Implies, Next, Yesterday, Future, Past };

  static PltlFormula top();
  static PltlFormula bottom();
  static PltlFormula prop(std::string name);
  static PltlFormula negation(PltlFormula operand);
  static PltlFormula conj(PltlFormula left, PltlFormula right);
  static PltlFormula disj(PltlFormula left, PltlFormula right);
  static PltlFormula implies(PltlFormula left, PltlFormula right);
  static PltlFormula next(PltlFormula operand);
  static PltlFormula yesterday(PltlFormula operand);
  static PltlFormula future(PltlFormula operand);
  static PltlFormula past(PltlFormula operand);

  Kind kind() const noexcept;
  const std::string& name() const;
  const PltlFormula& operand() const;
  const PltlFormula& left() const;
  const PltlFormula& right() const;

  const void* identity() const noexcept { return node_.get(); }

  friend bool operator==(const PltlFormula& lhs, const PltlFormula& rhs);

 private:
  struct Node;
  explicit PltlFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::set<std::string> agents_of(const Program& p);
std::set<std::string> agents_of(const Formula& f);
std::set<std::string> atoms_of(const Formula& f);
std::set<std::string> atoms_of(const PltlFormula& f);

/// Number of AST nodes (programs count their own nodes).
std::size_t size_of(const Formula& f);
std::size_t size_of(const PltlFormula& f);

}  // namespace tpdl::syntax
