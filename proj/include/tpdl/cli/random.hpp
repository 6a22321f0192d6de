#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tpdl/spaces/model.hpp"
#include "tpdl/syntax/ast.hpp"

namespace tpdl::gen {

using Rng = std::mt19937_64;

/// A random relation of the given kind. Transitive kinds close a random
/// relation of edge probability `density`; wk4 then drops each loop with
/// probability 1/2; partition kinds draw a random partition.
Relation random_relation(Rng& rng, std::size_t n, FrameKind kind, double density = 0.25);

/// Model named "0".."n-1" with one relation per (agent, kind) and each atom
/// true at each point with probability 1/2.
Model random_model(Rng& rng, std::size_t n, const std::vector<std::pair<std::string, FrameKind>>& agents,
                   const std::vector<std::string>& atoms, double density = 0.25);

struct FormulaOptions {
  std::vector<std::string> agents;
  std::vector<std::string> atoms;
  std::size_t depth = 3;
  std::size_t program_depth = 2;
  bool star = true;  // allow p* in programs
};

syntax::Program random_program(Rng& rng, const FormulaOptions& opts, std::size_t depth);
syntax::Formula random_formula(Rng& rng, const FormulaOptions& opts);
syntax::PltlFormula random_pltl(Rng& rng, const std::vector<std::string>& atoms, std::size_t depth);

/// Uniform permutation of {0..n-1}.
std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n);

/// Uniform integer in [lo, hi].
std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);

}  // namespace tpdl::gen
