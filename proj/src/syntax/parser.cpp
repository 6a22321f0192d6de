#include "tpdl/syntax/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "tpdl/error.hpp"

namespace tpdl::syntax {

namespace {

enum class Tok {
  Ident,
  Upper,
  Tilde,
  Amp,
  Bar,
  Arrow,
  LAngle,
  RAngle,
  LBracket,
  RBracket,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Semi,
  Star,
  End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return c >= 'a' && c <= 'z'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view text, std::string_view uppercase_ops) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (ident_start(c)) {
      while (i < text.size() && ident_char(text[i])) ++i;
      out.push_back({Tok::Ident, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (c >= 'A' && c <= 'Z') {
      if (uppercase_ops.find(c) == std::string_view::npos) {
        throw ParseError(std::string("unexpected character '") + c + "'", start);
      }
      out.push_back({Tok::Upper, std::string(1, c), start});
      ++i;
      continue;
    }
    if (c == '-') {
      if (i + 1 < text.size() && text[i + 1] == '>') {
        out.push_back({Tok::Arrow, "->", start});
        i += 2;
        continue;
      }
      throw ParseError("unexpected character '-' (did you mean '->'?)", start);
    }
    Tok kind;
    switch (c) {
      case '~': kind = Tok::Tilde; break;
      case '&': kind = Tok::Amp; break;
      case '|': kind = Tok::Bar; break;
      case '<': kind = Tok::LAngle; break;
      case '>': kind = Tok::RAngle; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      case ',': kind = Tok::Comma; break;
      case ';': kind = Tok::Semi; break;
      case '*': kind = Tok::Star; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

bool reserved(std::string_view name) { return name == "u" || name == "true" || name == "false"; }

/// Tracks how identifiers are used so that agents and atoms stay disjoint.
class Binding {
 public:
  explicit Binding(const std::set<std::string>* declared) : declared_(declared) {}

  void use_agent(const Token& t) {
    if (declared_ != nullptr && declared_->count(t.text) == 0) {
      throw ParseError("undeclared agent '" + t.text + "'", t.pos);
    }
    if (atoms_.count(t.text) != 0) throw ParseError(both(t.text), t.pos);
    agents_.emplace(t.text, t.pos);
  }

  void use_atom(const Token& t) {
    if ((declared_ != nullptr && declared_->count(t.text) != 0) || agents_.count(t.text) != 0) {
      throw ParseError(both(t.text), t.pos);
    }
    atoms_.emplace(t.text, t.pos);
  }

 private:
  static std::string both(const std::string& name) {
    return "identifier '" + name + "' used as both agent and atom";
  }

  const std::set<std::string>* declared_;
  std::map<std::string, std::size_t> agents_;
  std::map<std::string, std::size_t> atoms_;
};

template <class F>
class Parser {
 public:
  Parser(std::string_view text, const std::set<std::string>* agents)
      : tokens_(lex(text, std::is_same_v<F, Formula> ? "C" : "XYFP")), binding_(agents) {}

  F parse_whole_formula() {
    F f = parse_impl();
    expect_end();
    return f;
  }

  Program parse_whole_program() {
    Program p = parse_union();
    expect_end();
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      throw ParseError(std::string("expected ") + what + ", found " + describe(peek()), peek().pos);
    }
    return advance();
  }

  void expect_end() {
    if (peek().kind != Tok::End) throw ParseError("unexpected " + describe(peek()), peek().pos);
  }

  const Token& expect_identifier(const char* role) {
    const Token& t = peek();
    if (t.kind != Tok::Ident) {
      throw ParseError(std::string("expected ") + role + ", found " + describe(t), t.pos);
    }
    if (reserved(t.text)) throw ParseError("'" + t.text + "' is reserved", t.pos);
    return advance();
  }

  F parse_impl() {
    F left = parse_or();
    if (accept(Tok::Arrow)) return F::implies(std::move(left), parse_impl());
    return left;
  }

  F parse_or() {
    F left = parse_and();
    while (accept(Tok::Bar)) left = F::disj(std::move(left), parse_and());
    return left;
  }

  F parse_and() {
    F left = parse_unary();
    while (accept(Tok::Amp)) left = F::conj(std::move(left), parse_unary());
    return left;
  }

  F parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Tilde:
        advance();
        return F::negation(parse_unary());
      case Tok::LParen: {
        advance();
        F inner = parse_impl();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident:
        if (t.text == "true") {
          advance();
          return F::top();
        }
        if (t.text == "false") {
          advance();
          return F::bottom();
        }
        if (reserved(t.text)) throw ParseError("'" + t.text + "' is reserved", t.pos);
        binding_.use_atom(t);
        return F::prop(advance().text);
      default: break;
    }
    if constexpr (std::is_same_v<F, Formula>) {
      return parse_modal(t);
    } else {
      return parse_temporal(t);
    }
  }

  Formula parse_modal(const Token& t) {
    if (t.kind == Tok::LAngle || t.kind == Tok::LBracket) {
      advance();
      Program p = parse_union();
      const bool diamond = t.kind == Tok::LAngle;
      expect(diamond ? Tok::RAngle : Tok::RBracket, diamond ? "'>'" : "']'");
      Formula body = parse_unary();
      return diamond ? Formula::diamond(std::move(p), std::move(body))
                     : Formula::box(std::move(p), std::move(body));
    }
    if (t.kind == Tok::Upper && t.text == "C") {
      // C{a1,...,an} f  ==  [(a1 u ... u an)*] f
      advance();
      expect(Tok::LBrace, "'{'");
      const Token& first = expect_identifier("agent");
      binding_.use_agent(first);
      Program group = Program::atom(first.text);
      while (accept(Tok::Comma)) {
        const Token& next = expect_identifier("agent");
        binding_.use_agent(next);
        group = Program::choice(std::move(group), Program::atom(next.text));
      }
      expect(Tok::RBrace, "'}'");
      return Formula::box(Program::star(std::move(group)), parse_unary());
    }
    throw ParseError("unexpected " + describe(t), t.pos);
  }

  PltlFormula parse_temporal(const Token& t) {
    if (t.kind == Tok::Upper) {
      advance();
      PltlFormula body = parse_unary();
      switch (t.text[0]) {
        case 'X': return PltlFormula::next(std::move(body));
        case 'Y': return PltlFormula::yesterday(std::move(body));
        case 'F': return PltlFormula::future(std::move(body));
        default: return PltlFormula::past(std::move(body));
      }
    }
    throw ParseError("unexpected " + describe(t), t.pos);
  }

  bool at_union_operator() const { return peek().kind == Tok::Ident && peek().text == "u"; }

  Program parse_union() {
    Program left = parse_seq();
    while (at_union_operator()) {
      advance();
      left = Program::choice(std::move(left), parse_seq());
    }
    return left;
  }

  Program parse_seq() {
    Program left = parse_star();
    while (accept(Tok::Semi)) left = Program::seq(std::move(left), parse_star());
    return left;
  }

  Program parse_star() {
    Program p = parse_base();
    while (accept(Tok::Star)) p = Program::star(std::move(p));
    return p;
  }

  Program parse_base() {
    if (accept(Tok::LParen)) {
      Program inner = parse_union();
      expect(Tok::RParen, "')'");
      return inner;
    }
    const Token& t = expect_identifier("agent");
    binding_.use_agent(t);
    return Program::atom(t.text);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Binding binding_;
};

}  // namespace

Formula parse_formula(std::string_view text, const std::set<std::string>& agents) {
  return Parser<Formula>(text, &agents).parse_whole_formula();
}

Formula parse_formula(std::string_view text) { return Parser<Formula>(text, nullptr).parse_whole_formula(); }

Program parse_program(std::string_view text) { return Parser<Formula>(text, nullptr).parse_whole_program(); }

PltlFormula parse_pltl(std::string_view text) { return Parser<PltlFormula>(text, nullptr).parse_whole_formula(); }

bool is_identifier(std::string_view name) {
  if (name.empty() || !ident_start(name.front()) || reserved(name)) return false;
  for (char c : name) {
    if (!ident_char(c)) return false;
  }
  return true;
}

}  // namespace tpdl::syntax
