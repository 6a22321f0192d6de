#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "tpdl/spaces/model.hpp"

namespace tpdl {

using SetOperator = std::function<PointSet(const PointSet&)>;

/// A failed derivative-space axiom and the subsets witnessing it.
struct AxiomViolation {
  std::string axiom;  // "normality: d(empty) = empty", "normality: additivity", "weak idempotence"
  PointSet a;
  std::optional<PointSet> b;

  std::string describe() const;
};

/// Largest carrier for which the checks below enumerate every subset.
inline constexpr std::size_t kExhaustiveAxiomLimit = 12;

/// Checks d(empty) = empty, d(A u B) = d(A) u d(B) and d(d(A)) subset of
/// A u d(A). Every A and B is tried when the carrier has at most
/// kExhaustiveAxiomLimit points; above that `samples` random pairs drawn from
/// `seed` are tried.
std::optional<AxiomViolation> check_derivative_axioms(std::size_t universe, const SetOperator& d,
                                                      std::uint64_t seed = 0, std::size_t samples = 20000);

/// The same checks for the derivative of one agent of `m`.
std::optional<AxiomViolation> check_derivative_axioms(const Model& m, const std::string& agent);

}  // namespace tpdl
