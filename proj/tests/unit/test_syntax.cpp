#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "tpdl/cli/random.hpp"
#include "tpdl/error.hpp"
#include "tpdl/syntax/parser.hpp"
#include "tpdl/syntax/printer.hpp"
#include "tpdl/syntax/translate.hpp"

using namespace tpdl;
using namespace tpdl::syntax;

namespace {

const std::set<std::string> kAB{"a", "b"};

Program A() { return Program::atom("a"); }
Program B() { return Program::atom("b"); }
Formula P(const std::string& name) { return Formula::prop(name); }

std::size_t error_position(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error");
  return 0;
}

}  // namespace

TEST_CASE("common knowledge desugars to a box over the starred union") {
  CHECK(parse_formula("C{a,b} two", kAB) == Formula::box(Program::star(Program::choice(A(), B())), P("two")));
  CHECK(parse_formula("C{a,b} (p -> q)", kAB) == parse_formula("[(a u b)*](p -> q)", kAB));
  CHECK(parse_formula("C{a} p", kAB) == parse_formula("[a*]p", kAB));
}

TEST_CASE("formula grammar shapes") {
  CHECK(parse_formula("p", kAB) == P("p"));
  CHECK(parse_formula("<a;b>q & ~[a]p", kAB) ==
        Formula::conj(Formula::diamond(Program::seq(A(), B()), P("q")), Formula::negation(Formula::box(A(), P("p")))));
  // -> is right associative and binds loosest.
  CHECK(parse_formula("p -> q -> r", kAB) == Formula::implies(P("p"), Formula::implies(P("q"), P("r"))));
  CHECK(parse_formula("p | q & r", kAB) == Formula::disj(P("p"), Formula::conj(P("q"), P("r"))));
  // ; binds tighter than u, * tightest.
  CHECK(parse_program("a;b u a*") == Program::choice(Program::seq(A(), B()), Program::star(A())));
  CHECK(parse_program("a**") == Program::star(Program::star(A())));
  CHECK(parse_formula("  < a ; b >  q ", kAB) == parse_formula("<a;b>q", kAB));
  CHECK(parse_formula("true & ~false", kAB) == Formula::conj(Formula::top(), Formula::negation(Formula::bottom())));
}

TEST_CASE("temporal grammar shapes") {
  using T = PltlFormula;
  CHECK(parse_pltl("F q & ~P q") == T::conj(T::future(T::prop("q")), T::negation(T::past(T::prop("q")))));
  CHECK(parse_pltl("X Y p") == T::next(T::yesterday(T::prop("p"))));
  CHECK(parse_pltl("q -> F q") == T::implies(T::prop("q"), T::future(T::prop("q"))));
  CHECK(parse_pltl("XXp") == T::next(T::next(T::prop("p"))));
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_position([] { parse_formula("p $ q", kAB); }) == 2);
  CHECK(error_position([] { parse_formula("(p & q", kAB); }) == 6);
  CHECK(error_position([] { parse_formula("<a>a", kAB); }) == 3);
  CHECK(error_position([] { parse_formula("<c>p", kAB); }) == 1);
  CHECK(error_position([] { parse_formula("p - q", kAB); }) == 2);
  CHECK(error_position([] { parse_formula("p q", kAB); }) == 2);
  CHECK_THROWS_AS(parse_formula("<a>p & [p]q"), ParseError);
  CHECK_THROWS_AS(parse_pltl("<a>p"), ParseError);
  CHECK_THROWS_AS(parse_formula("F p", kAB), ParseError);
  CHECK_THROWS_AS(parse_formula("", kAB), ParseError);
  CHECK_THROWS_AS(parse_formula("u", kAB), ParseError);
}

TEST_CASE("agents are inferred from program positions") {
  const Formula f = parse_formula("<x;y>p & [x]q");
  CHECK(agents_of(f) == std::set<std::string>{"x", "y"});
  CHECK(atoms_of(f) == std::set<std::string>{"p", "q"});
}

TEST_CASE("identifiers") {
  CHECK(is_identifier("whole"));
  CHECK(is_identifier("q_2x"));
  CHECK_FALSE(is_identifier("u"));
  CHECK_FALSE(is_identifier("true"));
  CHECK_FALSE(is_identifier("Whole"));
  CHECK_FALSE(is_identifier("2q"));
  CHECK_FALSE(is_identifier(""));
}

TEST_CASE("printing uses minimal parentheses") {
  CHECK(to_string(parse_formula("<(a u b)*>q", kAB)) == "<(a u b)*>q");
  CHECK(to_string(parse_formula("(p -> q) -> r", kAB)) == "(p -> q) -> r");
  CHECK(to_string(parse_formula("p -> (q -> r)", kAB)) == "p -> q -> r");
  CHECK(to_string(parse_formula("~(p & q) | r", kAB)) == "~(p & q) | r");
  CHECK(to_string(parse_program("(a;b)*")) == "(a;b)*");
  CHECK(to_string(parse_program("a;(b u a)")) == "a;(b u a)");
  CHECK(to_string(parse_pltl("F q & ~P q")) == "F q & ~P q");
}

TEST_CASE("star translation") {
  CHECK(to_string(star_translation(parse_formula("<(a u b)*>q", kAB))) == "<(a* u b*)*>q");
  CHECK(star_translation(P("p")) == P("p"));
  CHECK(to_string(star_translation(parse_formula("[a]p", kAB))) == "[a*]p");
}

TEST_CASE("plus translation") {
  CHECK(to_string(plus_translation(parse_formula("<a>p", kAB))) == "<a;a*>p");
  CHECK(plus_translation(parse_formula("<(a u b)*>q", kAB)) ==
        Formula::diamond(Program::star(Program::choice(Program::seq(A(), Program::star(A())),
                                                       Program::seq(B(), Program::star(B())))),
                         P("q")));
  CHECK(plus_translation(parse_formula("~p", kAB)) == parse_formula("~p", kAB));
}

TEST_CASE("top translation") {
  auto top = [](const char* text) { return to_string(top_translation(parse_pltl(text), "a", "b")); };
  CHECK(top("F q") == "<(a;b)*>q");
  CHECK(top("X p") == "<a;b>p");
  CHECK(top("Y p") == "<b;a>p");
  CHECK(top("P p") == "<(b;a)*>p");
  CHECK(top("F q & ~P q") == "<(a;b)*>q & ~<(b;a)*>q");
  CHECK_THROWS_AS(top_translation(parse_pltl("X p"), "a", "a"), PreconditionError);
}

TEST_CASE("modal depth and star freedom") {
  CHECK(modal_depth(parse_formula("<a><b>p", kAB)) == 2);
  CHECK(star_free(parse_formula("<a><b>p", kAB)));
  CHECK(modal_depth(parse_formula("p & q", kAB)) == 0);
  CHECK(modal_depth(parse_formula("<a*>p", kAB)) == 1);
  CHECK_FALSE(star_free(parse_formula("<a*>p", kAB)));
  CHECK(modal_reach(parse_formula("<a;b>p", kAB)) == 2);
  CHECK(modal_reach(parse_formula("<a u b;a>[a]p", kAB)) == 3);
  CHECK_THROWS_AS(modal_reach(parse_formula("<a*>p", kAB)), PreconditionError);
}

TEST_CASE("printing then parsing gives back random formulas") {
  gen::Rng rng(7);
  gen::FormulaOptions opts{{"a", "b"}, {"p", "q", "r"}, 5, 3, true};
  for (int i = 0; i < 2000; ++i) {
    const Formula f = gen::random_formula(rng, opts);
    const std::string text = to_string(f);
    CAPTURE(text);
    REQUIRE(parse_formula(text, kAB) == f);
  }
  for (int i = 0; i < 2000; ++i) {
    const PltlFormula f = gen::random_pltl(rng, {"p", "q"}, 6);
    CAPTURE(to_string(f));
    REQUIRE(parse_pltl(to_string(f)) == f);
  }
}

namespace {

// One layer of a translation: the translated node must be the same
// constructor applied to the translated children.
template <class Tr>
void check_homomorphic(const Program& p, Tr tr, const std::function<Program(const Program&)>& leaf) {
  using K = Program::Kind;
  switch (p.kind()) {
    case K::Atom: CHECK(tr(p) == leaf(p)); break;
    case K::Seq: CHECK(tr(p) == Program::seq(tr(p.left()), tr(p.right()))); break;
    case K::Union: CHECK(tr(p) == Program::choice(tr(p.left()), tr(p.right()))); break;
    case K::Star: CHECK(tr(p) == Program::star(tr(p.body()))); break;
  }
}

template <class TrF, class TrP>
void check_homomorphic(const Formula& f, TrF tf, TrP tp) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False:
    case K::Prop: CHECK(tf(f) == f); break;
    case K::Not: CHECK(tf(f) == Formula::negation(tf(f.operand()))); break;
    case K::And: CHECK(tf(f) == Formula::conj(tf(f.left()), tf(f.right()))); break;
    case K::Or: CHECK(tf(f) == Formula::disj(tf(f.left()), tf(f.right()))); break;
    case K::Implies: CHECK(tf(f) == Formula::implies(tf(f.left()), tf(f.right()))); break;
    case K::Diamond: CHECK(tf(f) == Formula::diamond(tp(f.program()), tf(f.operand()))); break;
    case K::Box: CHECK(tf(f) == Formula::box(tp(f.program()), tf(f.operand()))); break;
  }
}

}  // namespace

TEST_CASE("star and plus translations commute with every constructor but atoms") {
  gen::Rng rng(11);
  gen::FormulaOptions opts{{"a", "b"}, {"p", "q"}, 4, 3, true};
  auto sf = [](const Formula& f) { return star_translation(f); };
  auto sp = [](const Program& p) { return star_translation(p); };
  auto pf = [](const Formula& f) { return plus_translation(f); };
  auto pp = [](const Program& p) { return plus_translation(p); };
  for (int i = 0; i < 300; ++i) {
    const Formula f = gen::random_formula(rng, opts);
    check_homomorphic(f, sf, sp);
    check_homomorphic(f, pf, pp);
    const Program p = gen::random_program(rng, opts, 4);
    check_homomorphic(p, sp, [](const Program& a) { return Program::star(a); });
    check_homomorphic(p, pp, [](const Program& a) { return Program::seq(a, Program::star(a)); });
  }
}

TEST_CASE("top translation only mentions the two agents") {
  gen::Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto f = gen::random_pltl(rng, {"p", "q"}, 5);
    const Formula t = top_translation(f, "left", "right");
    const auto agents = agents_of(t);
    CHECK(std::includes(std::set<std::string>{"left", "right"}.begin(), std::set<std::string>{"left", "right"}.end(),
                        agents.begin(), agents.end()));
    CHECK(atoms_of(t) == atoms_of(f));
  }
}
