#include "tpdl/syntax/translate.hpp"

#include <algorithm>
#include <functional>

#include "tpdl/error.hpp"

namespace tpdl::syntax {

namespace {

using LeafMap = std::function<Program(const std::string&)>;

Program map_leaves(const Program& p, const LeafMap& leaf) {
  switch (p.kind()) {
    case Program::Kind::Atom: return leaf(p.agent());
    case Program::Kind::Seq: return Program::seq(map_leaves(p.left(), leaf), map_leaves(p.right(), leaf));
    case Program::Kind::Union: return Program::choice(map_leaves(p.left(), leaf), map_leaves(p.right(), leaf));
    case Program::Kind::Star: return Program::star(map_leaves(p.body(), leaf));
  }
  return p;
}

Formula map_leaves(const Formula& f, const LeafMap& leaf) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False:
    case K::Prop: return f;
    case K::Not: return Formula::negation(map_leaves(f.operand(), leaf));
    case K::And: return Formula::conj(map_leaves(f.left(), leaf), map_leaves(f.right(), leaf));
    case K::Or: return Formula::disj(map_leaves(f.left(), leaf), map_leaves(f.right(), leaf));
    case K::Implies: return Formula::implies(map_leaves(f.left(), leaf), map_leaves(f.right(), leaf));
    case K::Diamond: return Formula::diamond(map_leaves(f.program(), leaf), map_leaves(f.operand(), leaf));
    case K::Box: return Formula::box(map_leaves(f.program(), leaf), map_leaves(f.operand(), leaf));
  }
  return f;
}

Program starred(const std::string& a) { return Program::star(Program::atom(a)); }
Program plussed(const std::string& a) { return Program::seq(Program::atom(a), starred(a)); }

bool program_star_free(const Program& p) {
  switch (p.kind()) {
    case Program::Kind::Atom: return true;
    case Program::Kind::Star: return false;
    default: return program_star_free(p.left()) && program_star_free(p.right());
  }
}

std::size_t program_reach(const Program& p) {
  switch (p.kind()) {
    case Program::Kind::Atom: return 1;
    case Program::Kind::Seq: return program_reach(p.left()) + program_reach(p.right());
    case Program::Kind::Union: return std::max(program_reach(p.left()), program_reach(p.right()));
    case Program::Kind::Star: break;
  }
  throw PreconditionError("modal reach is unbounded for programs with iteration");
}

}  // namespace

Formula star_translation(const Formula& f) { return map_leaves(f, starred); }
Program star_translation(const Program& p) { return map_leaves(p, starred); }
Formula plus_translation(const Formula& f) { return map_leaves(f, plussed); }
Program plus_translation(const Program& p) { return map_leaves(p, plussed); }

Formula top_translation(const PltlFormula& f, const std::string& a, const std::string& b) {
  if (a == b) throw PreconditionError("top translation needs two distinct agents, got '" + a + "' twice");
  const Program forward = Program::seq(Program::atom(a), Program::atom(b));
  const Program backward = Program::seq(Program::atom(b), Program::atom(a));

  const std::function<Formula(const PltlFormula&)> go = [&](const PltlFormula& g) -> Formula {
    using K = PltlFormula::Kind;
    switch (g.kind()) {
      case K::True: return Formula::top();
      case K::False: return Formula::bottom();
      case K::Prop: return Formula::prop(g.name());
      case K::Not: return Formula::negation(go(g.operand()));
      case K::And: return Formula::conj(go(g.left()), go(g.right()));
      case K::Or: return Formula::disj(go(g.left()), go(g.right()));
      case K::Implies: return Formula::implies(go(g.left()), go(g.right()));
      case K::Next: return Formula::diamond(forward, go(g.operand()));
      case K::Yesterday: return Formula::diamond(backward, go(g.operand()));
      case K::Future: return Formula::diamond(Program::star(forward), go(g.operand()));
      case K::Past: return Formula::diamond(Program::star(backward), go(g.operand()));
    }
    return Formula::top();
  };
  return go(f);
}

std::size_t modal_depth(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False:
    case K::Prop: return 0;
    case K::Not: return modal_depth(f.operand());
    case K::Diamond:
    case K::Box: return 1 + modal_depth(f.operand());
    default: return std::max(modal_depth(f.left()), modal_depth(f.right()));
  }
}

std::size_t modal_reach(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False:
    case K::Prop: return 0;
    case K::Not: return modal_reach(f.operand());
    case K::Diamond:
    case K::Box: return program_reach(f.program()) + modal_reach(f.operand());
    default: return std::max(modal_reach(f.left()), modal_reach(f.right()));
  }
}

bool star_free(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False:
    case K::Prop: return true;
    case K::Not: return star_free(f.operand());
    case K::Diamond:
    case K::Box: return program_star_free(f.program()) && star_free(f.operand());
    default: return star_free(f.left()) && star_free(f.right());
  }
}

}  // namespace tpdl::syntax
