#pragma once

#include <ostream>
#include <string>

#include "tpdl/syntax/ast.hpp"

namespace tpdl::syntax {

// Canonical ASCII rendering with the minimum number of parentheses. The output
// is accepted by the matching parser and parses back to an equal AST.
//
//   programs:  a   p;q   p u q   p*
//   formulas:  ~f  f & g  f | g  f -> g  <p>f  [p]f  true  false
//   temporal:  X f  Y f  F f  P f

std::string to_string(const Program& p);
std::string to_string(const Formula& f);
std::string to_string(const PltlFormula& f);

std::ostream& operator<<(std::ostream& os, const Program& p);
std::ostream& operator<<(std::ostream& os, const Formula& f);
std::ostream& operator<<(std::ostream& os, const PltlFormula& f);

}  // namespace tpdl::syntax
