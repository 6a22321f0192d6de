#pragma once

#include <set>
#include <string>
#include <string_view>

#include "tpdl/syntax/ast.hpp"

namespace tpdl::syntax {

// Concrete grammar (whitespace insensitive):
//
//   formula := impl
//   impl    := or ("->" impl)?
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "~" unary | "<" program ">" unary | "[" program "]" unary
//            | "C" "{" ident ("," ident)* "}" unary
//            | "true" | "false" | ident | "(" formula ")"
//   program := union
//   union   := seq ("u" seq)*
//   seq     := star (";" star)*
//   star    := base "*"*
//   base    := ident | "(" program ")"
//
// Temporal formulas share the Boolean layer; their unary level accepts the
// prefixes X, Y, F and P instead of modalities. Identifiers match
// [a-z][a-zA-Z0-9_]*; `u`, `true` and `false` are reserved.
//
// All parse functions throw ParseError carrying the byte offset of the
// offending token.

/// Parses a formula whose agents are exactly `agents`. Every other identifier
/// is an atom; a declared agent in atom position, or an undeclared identifier
/// in program position, is an error.
Formula parse_formula(std::string_view text, const std::set<std::string>& agents);

/// Parses a formula, treating identifiers in program position as agents. An
/// identifier used both as an agent and as an atom is still an error.
Formula parse_formula(std::string_view text);

Program parse_program(std::string_view text);

PltlFormula parse_pltl(std::string_view text);

/// True iff `name` is a legal identifier and not reserved.
bool is_identifier(std::string_view name);

}  // namespace tpdl::syntax
