#include "tpdl/cli/random.hpp"

#include <algorithm>
#include <numeric>

#include "tpdl/error.hpp"

namespace tpdl::gen {

using syntax::Formula;
using syntax::PltlFormula;
using syntax::Program;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

namespace {

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Relation random_edges(Rng& rng, std::size_t n, double density) {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (coin(rng, density)) r.add(i, j);
    }
  }
  return r;
}

std::vector<std::size_t> random_blocks(Rng& rng, std::size_t n) {
  const std::size_t k = uniform(rng, 1, std::max<std::size_t>(1, n));
  std::vector<std::size_t> block(n);
  for (auto& b : block) b = uniform(rng, 0, k - 1);
  return block;
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  if (xs.empty()) throw PreconditionError("cannot pick from an empty list");
  return xs[uniform(rng, 0, xs.size() - 1)];
}

}  // namespace

Relation random_relation(Rng& rng, std::size_t n, FrameKind kind, double density) {
  switch (kind) {
    case FrameKind::Any: return random_edges(rng, n, density);
    case FrameKind::K4: return transitive_closure(random_edges(rng, n, density));
    case FrameKind::S4: return reflexive_transitive_closure(random_edges(rng, n, density));
    case FrameKind::WK4:
    case FrameKind::IrreflexiveWK4: {
      Relation r = reflexive_transitive_closure(random_edges(rng, n, density));
      for (std::size_t i = 0; i < n; ++i) {
        if (kind == FrameKind::IrreflexiveWK4 || coin(rng, 0.5)) r.remove(i, i);
      }
      return r;
    }
    case FrameKind::Equivalence:
    case FrameKind::MonadicDerivative: {
      const auto block = random_blocks(rng, n);
      Relation r(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (block[i] == block[j] && (kind == FrameKind::Equivalence || i != j)) r.add(i, j);
        }
      }
      return r;
    }
  }
  return Relation(n);
}

Model random_model(Rng& rng, std::size_t n, const std::vector<std::pair<std::string, FrameKind>>& agents,
                   const std::vector<std::string>& atoms, double density) {
  Model m = Model::with_points(n);
  for (const auto& [name, kind] : agents) m.set_agent(name, kind, random_relation(rng, n, kind, density));
  for (const auto& a : atoms) {
    PointSet truth(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (coin(rng, 0.5)) truth.insert(x);
    }
    m.set_valuation(a, truth);
  }
  return m;
}

Program random_program(Rng& rng, const FormulaOptions& opts, std::size_t depth) {
  if (depth == 0 || coin(rng, 0.4)) return Program::atom(pick(rng, opts.agents));
  switch (uniform(rng, 0, opts.star ? 2 : 1)) {
    case 0: return Program::seq(random_program(rng, opts, depth - 1), random_program(rng, opts, depth - 1));
    case 1: return Program::choice(random_program(rng, opts, depth - 1), random_program(rng, opts, depth - 1));
    default: return Program::star(random_program(rng, opts, depth - 1));
  }
}

namespace {

Formula formula_at(Rng& rng, const FormulaOptions& opts, std::size_t depth) {
  if (depth == 0 || coin(rng, 0.2)) {
    const std::size_t r = uniform(rng, 0, 9);
    if (r == 0) return Formula::top();
    if (r == 1) return Formula::bottom();
    return Formula::prop(pick(rng, opts.atoms));
  }
  switch (uniform(rng, 0, 5)) {
    case 0: return Formula::negation(formula_at(rng, opts, depth - 1));
    case 1: return Formula::conj(formula_at(rng, opts, depth - 1), formula_at(rng, opts, depth - 1));
    case 2: return Formula::disj(formula_at(rng, opts, depth - 1), formula_at(rng, opts, depth - 1));
    case 3: return Formula::implies(formula_at(rng, opts, depth - 1), formula_at(rng, opts, depth - 1));
    case 4: return Formula::diamond(random_program(rng, opts, opts.program_depth), formula_at(rng, opts, depth - 1));
    default: return Formula::box(random_program(rng, opts, opts.program_depth), formula_at(rng, opts, depth - 1));
  }
}

PltlFormula pltl_at(Rng& rng, const std::vector<std::string>& atoms, std::size_t depth) {
  if (depth == 0 || coin(rng, 0.2)) {
    const std::size_t r = uniform(rng, 0, 9);
    if (r == 0) return PltlFormula::top();
    if (r == 1) return PltlFormula::bottom();
    return PltlFormula::prop(pick(rng, atoms));
  }
  switch (uniform(rng, 0, 7)) {
    case 0: return PltlFormula::negation(pltl_at(rng, atoms, depth - 1));
    case 1: return PltlFormula::conj(pltl_at(rng, atoms, depth - 1), pltl_at(rng, atoms, depth - 1));
    case 2: return PltlFormula::disj(pltl_at(rng, atoms, depth - 1), pltl_at(rng, atoms, depth - 1));
    case 3: return PltlFormula::implies(pltl_at(rng, atoms, depth - 1), pltl_at(rng, atoms, depth - 1));
    case 4: return PltlFormula::next(pltl_at(rng, atoms, depth - 1));
    case 5: return PltlFormula::yesterday(pltl_at(rng, atoms, depth - 1));
    case 6: return PltlFormula::future(pltl_at(rng, atoms, depth - 1));
    default: return PltlFormula::past(pltl_at(rng, atoms, depth - 1));
  }
}

}  // namespace

Formula random_formula(Rng& rng, const FormulaOptions& opts) { return formula_at(rng, opts, opts.depth); }

PltlFormula random_pltl(Rng& rng, const std::vector<std::string>& atoms, std::size_t depth) {
  return pltl_at(rng, atoms, depth);
}

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace tpdl::gen
