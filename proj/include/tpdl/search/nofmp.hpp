#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "tpdl/pltl/tail_set.hpp"
#include "tpdl/search/search.hpp"
#include "tpdl/syntax/ast.hpp"

namespace tpdl::search {

/// psi = (F q & ~P q)^top & C{a,b} Two, over agents a, b and atoms q, whole.
syntax::Formula nofmp_formula();

struct NoFmpOptions {
  /// Monadic pair bimodels are searched for every even n in 2..max_size.
  std::size_t max_size = 6;
  /// General WK4 bimodels for n in 1..wk4_max_size; 0 skips them.
  std::size_t wk4_max_size = 4;
  /// Monadic pair bimodels with every whole-valuation, for even n up to this.
  std::size_t unfiltered_max_size = 4;
  double budget_seconds = 0;
  unsigned jobs = 1;
};

struct NoFmpRow {
  std::string klass;
  std::size_t n = 0;
  Verdict verdict = Verdict::Unsat;
  SearchStats stats;
  std::string note;
};

struct NoFmpReport {
  std::string formula;
  std::vector<NoFmpRow> rows;
  /// The infinite witness: q true exactly at 1 on the integers.
  std::string witness_formula;
  pltl::TailSet witness_truth;
  bool witness_holds = false;
  /// Finite models satisfying psi; each one contradicts the theorem.
  std::vector<std::string> counterexamples;

  /// Every row UNSAT, no counterexample, and the infinite witness holds at 0.
  bool reproduces_theorem() const;
};

/// Pipeline for monadic pair bimodels: for each pair of perfect matchings
/// (canonical up to point permutations), every whole-colouring making each a-pair
/// and each b-pair bichromatic, and every q-valuation, psi is evaluated in full.
/// Throws PreconditionError unless max_size is even and at least 2.
NoFmpReport nofmp_experiment(const NoFmpOptions& options = {});

nlohmann::json report_to_json(const NoFmpReport& report);
std::string report_table(const NoFmpReport& report);

}  // namespace tpdl::search
