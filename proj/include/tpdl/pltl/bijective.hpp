#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tpdl/spaces/point_set.hpp"
#include "tpdl/syntax/ast.hpp"

namespace tpdl::pltl {

/// A finite bijective frame {0..n-1} with successor permutation `succ`, plus a
/// valuation.
class BijectiveModel {
 public:
  BijectiveModel() = default;
  /// Throws PreconditionError unless `succ` is a permutation of {0..n-1}.
  explicit BijectiveModel(std::vector<std::size_t> succ);

  std::size_t size() const noexcept { return succ_.size(); }
  std::size_t succ(std::size_t x) const { return succ_.at(x); }
  std::size_t pred(std::size_t x) const { return pred_.at(x); }
  const std::vector<std::size_t>& successor() const noexcept { return succ_; }

  void set_valuation(const std::string& atom, PointSet truth);
  /// Throws UnknownIdentifier.
  const PointSet& valuation(const std::string& atom) const;
  bool has_atom(const std::string& atom) const noexcept;
  std::vector<std::string> atom_names() const;

  /// Orbits of the permutation, each starting at its smallest point.
  std::vector<std::vector<std::size_t>> cycles() const;

 private:
  std::vector<std::size_t> succ_;
  std::vector<std::size_t> pred_;
  std::vector<std::pair<std::string, PointSet>> valuation_;
};

/// Truth set over {0..n-1}. X and Y move along succ and its inverse; F and P
/// are least fixpoints of Z = A u succ^-1(Z) and Z = A u succ(Z).
PointSet eval_pltl_finite(const BijectiveModel& m, const syntax::PltlFormula& f);

/// Pointwise satisfaction read directly off the clauses, searching
/// succ^k(w) and succ^-k(w) for 0 <= k < n. Independent of eval_pltl_finite.
bool holds_pltl_at(const BijectiveModel& m, std::size_t w, const syntax::PltlFormula& f);

}  // namespace tpdl::pltl
