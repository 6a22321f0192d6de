#pragma once

#include <cstddef>
#include <string>

#include "tpdl/syntax/ast.hpp"

namespace tpdl::syntax {

/// Replaces every agent `a` by `a*`. Evaluating the result on a relational
/// model agrees with evaluating the input on its reflexive-transitive closure.
Formula star_translation(const Formula& f);
Program star_translation(const Program& p);

/// Replaces every agent `a` by `a;a*`, the strict transitive closure `a+`.
Formula plus_translation(const Formula& f);
Program plus_translation(const Program& p);

/// Embeds a temporal formula using two agents whose composite `a;b` plays the
/// role of the successor function:
///   X f -> <a;b>f    Y f -> <b;a>f    F f -> <(a;b)*>f    P f -> <(b;a)*>f
/// Atoms are kept and Boolean connectives commute. Throws PreconditionError
/// when `a == b`.
Formula top_translation(const PltlFormula& f, const std::string& a, const std::string& b);

/// Nesting depth of modalities.
std::size_t modal_depth(const Formula& f);

/// Longest chain of agent steps a star-free formula can inspect from the
/// evaluation point: `<a;b>p` has depth 1 but reach 2. Throws
/// PreconditionError when `f` contains an iteration.
std::size_t modal_reach(const Formula& f);

/// True iff no iteration occurs anywhere in `f`.
bool star_free(const Formula& f);

}  // namespace tpdl::syntax
