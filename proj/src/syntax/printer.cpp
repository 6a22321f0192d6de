#include "tpdl/syntax/printer.hpp"

#include <sstream>

namespace tpdl::syntax {

namespace {

// Binding strength; a subterm printed in a context demanding a higher level
// gets parenthesised.
enum Level : int { kImplies = 1, kOr = 2, kAnd = 3, kUnary = 4 };
enum ProgramLevel : int { kUnion = 1, kSeq = 2, kStar = 3, kBase = 4 };

int level(const Program& p) {
  switch (p.kind()) {
    case Program::Kind::Union: return kUnion;
    case Program::Kind::Seq: return kSeq;
    case Program::Kind::Star: return kStar;
    case Program::Kind::Atom: return kBase;
  }
  return kBase;
}

void print(std::ostream& os, const Program& p, int min_level) {
  const bool wrap = level(p) < min_level;
  if (wrap) os << '(';
  switch (p.kind()) {
    case Program::Kind::Atom: os << p.agent(); break;
    case Program::Kind::Union:
      print(os, p.left(), kUnion);
      os << " u ";
      print(os, p.right(), kSeq);
      break;
    case Program::Kind::Seq:
      print(os, p.left(), kSeq);
      os << ';';
      print(os, p.right(), kStar);
      break;
    case Program::Kind::Star:
      print(os, p.body(), kStar);
      os << '*';
      break;
  }
  if (wrap) os << ')';
}

template <class F>
int binary_level(typename F::Kind k) {
  switch (k) {
    case F::Kind::Implies: return kImplies;
    case F::Kind::Or: return kOr;
    case F::Kind::And: return kAnd;
    default: return kUnary;
  }
}

template <class F>
bool print_binary(std::ostream& os, const F& f, void (*rec)(std::ostream&, const F&, int)) {
  switch (f.kind()) {
    case F::Kind::Implies:
      rec(os, f.left(), kOr);
      os << " -> ";
      rec(os, f.right(), kImplies);
      return true;
    case F::Kind::Or:
      rec(os, f.left(), kOr);
      os << " | ";
      rec(os, f.right(), kAnd);
      return true;
    case F::Kind::And:
      rec(os, f.left(), kAnd);
      os << " & ";
      rec(os, f.right(), kUnary);
      return true;
    default: return false;
  }
}

void print(std::ostream& os, const Formula& f, int min_level) {
  const bool wrap = binary_level<Formula>(f.kind()) < min_level;
  if (wrap) os << '(';
  if (!print_binary<Formula>(os, f, &print)) {
    switch (f.kind()) {
      case Formula::Kind::True: os << "true"; break;
      case Formula::Kind::False: os << "false"; break;
      case Formula::Kind::Prop: os << f.name(); break;
      case Formula::Kind::Not:
        os << '~';
        print(os, f.operand(), kUnary);
        break;
      case Formula::Kind::Diamond:
        os << '<';
        print(os, f.program(), kUnion);
        os << '>';
        print(os, f.operand(), kUnary);
        break;
      case Formula::Kind::Box:
        os << '[';
        print(os, f.program(), kUnion);
        os << ']';
        print(os, f.operand(), kUnary);
        break;
      default: break;
    }
  }
  if (wrap) os << ')';
}

void print(std::ostream& os, const PltlFormula& f, int min_level) {
  const bool wrap = binary_level<PltlFormula>(f.kind()) < min_level;
  if (wrap) os << '(';
  if (!print_binary<PltlFormula>(os, f, &print)) {
    using K = PltlFormula::Kind;
    const char* prefix = nullptr;
    switch (f.kind()) {
      case K::True: os << "true"; break;
      case K::False: os << "false"; break;
      case K::Prop: os << f.name(); break;
      case K::Not: prefix = "~"; break;
      case K::Next: prefix = "X "; break;
      case K::Yesterday: prefix = "Y "; break;
      case K::Future: prefix = "F "; break;
      case K::Past: prefix = "P "; break;
      default: break;
    }
    if (prefix != nullptr) {
      os << prefix;
      print(os, f.operand(), kUnary);
    }
  }
  if (wrap) os << ')';
}

template <class T>
std::string render(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Program& p) {
  print(os, p, kUnion);
  return os;
}
std::ostream& operator<<(std::ostream& os, const Formula& f) {
  print(os, f, kImplies);
  return os;
}
std::ostream& operator<<(std::ostream& os, const PltlFormula& f) {
  print(os, f, kImplies);
  return os;
}

std::string to_string(const Program& p) { return render(p); }
std::string to_string(const Formula& f) { return render(f); }
std::string to_string(const PltlFormula& f) { return render(f); }

}  // namespace tpdl::syntax
