#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tpdl/spaces/model.hpp"
#include "tpdl/syntax/ast.hpp"

namespace tpdl::semantics {

/// Applies the set transformer of a program:
///   agent a   d_a(Y)
///   p;q       [[p]]([[q]](Y))
///   p u q     [[p]](Y) u [[q]](Y)
///   p*        least Z with Y u [[p]](Z) subset of Z, by Kleene iteration from the empty set
/// Throws UnknownIdentifier for agents the model lacks.
PointSet eval_program(const Model& m, const syntax::Program& program, const PointSet& y);

/// Truth set of `f`. Throws UnknownIdentifier for undeclared atoms or agents.
PointSet evaluate(const Model& m, const syntax::Formula& f);

/// Truth set of a formula together with the truth set of every subformula.
class EvalResult {
 public:
  EvalResult(syntax::Formula formula, PointSet truth, std::vector<std::pair<syntax::Formula, PointSet>> subformulas)
      : formula_(std::move(formula)), truth_(std::move(truth)), subformulas_(std::move(subformulas)) {}

  const syntax::Formula& formula() const noexcept { return formula_; }
  const PointSet& truth_set() const noexcept { return truth_; }
  /// Subformulas in evaluation (post-)order, each listed once.
  const std::vector<std::pair<syntax::Formula, PointSet>>& subformulas() const noexcept { return subformulas_; }
  /// Cached truth set of a subformula, or nullptr.
  const PointSet* find(const syntax::Formula& sub) const;

 private:
  syntax::Formula formula_;
  PointSet truth_;
  std::vector<std::pair<syntax::Formula, PointSet>> subformulas_;
};

EvalResult truth_set(const Model& m, const syntax::Formula& f);
bool holds_at(const Model& m, PointId x, const syntax::Formula& f);
bool holds_at(const Model& m, const std::string& point, const syntax::Formula& f);
/// True iff `f` holds at every point.
bool validates(const Model& m, const syntax::Formula& f);

/// Largest carrier accepted by star_oracle.
inline constexpr std::size_t kStarOracleLimit = 16;

/// [[body*]](Y) computed literally as the intersection of every Z with
/// [[body]](Z) u Y subset of Z. Enumerates all 2^n subsets; throws
/// PreconditionError above kStarOracleLimit points.
PointSet star_oracle(const Model& m, const syntax::Program& body, const PointSet& y);

}  // namespace tpdl::semantics
