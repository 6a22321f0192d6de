#include "tpdl/spaces/axioms.hpp"

#include <random>
#include <sstream>
#include <vector>

namespace tpdl {

std::string AxiomViolation::describe() const {
  std::ostringstream os;
  os << axiom << " fails for A = " << a;
  if (b) os << ", B = " << *b;
  return os.str();
}

namespace {

std::optional<AxiomViolation> check_exhaustive(std::size_t n, const SetOperator& d) {
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<std::uint64_t> table(subsets);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) table[mask] = d(PointSet::from_mask(n, mask)).to_mask();

  auto set = [n](std::uint64_t mask) { return PointSet::from_mask(n, mask); };
  if (table[0] != 0) return AxiomViolation{"normality: d(empty) = empty", set(0), std::nullopt};
  for (std::uint64_t a = 0; a < subsets; ++a) {
    for (std::uint64_t b = a + 1; b < subsets; ++b) {
      if (table[a | b] != (table[a] | table[b])) return AxiomViolation{"normality: additivity", set(a), set(b)};
    }
  }
  for (std::uint64_t a = 0; a < subsets; ++a) {
    if ((table[table[a]] & ~(a | table[a])) != 0) return AxiomViolation{"weak idempotence", set(a), std::nullopt};
  }
  return std::nullopt;
}

std::optional<AxiomViolation> check_sampled(std::size_t n, const SetOperator& d, std::uint64_t seed,
                                            std::size_t samples) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  auto random_set = [&] {
    PointSet s(n);
    for (PointId p = 0; p < n; ++p) {
      if (coin(rng)) s.insert(p);
    }
    return s;
  };
  const PointSet none(n);
  if (!d(none).empty()) return AxiomViolation{"normality: d(empty) = empty", none, std::nullopt};
  for (std::size_t i = 0; i < samples; ++i) {
    const PointSet a = random_set();
    const PointSet b = random_set();
    const PointSet da = d(a);
    if (d(a | b) != (da | d(b))) return AxiomViolation{"normality: additivity", a, b};
    if (!d(da).is_subset_of(a | da)) return AxiomViolation{"weak idempotence", a, std::nullopt};
  }
  return std::nullopt;
}

}  // namespace

std::optional<AxiomViolation> check_derivative_axioms(std::size_t universe, const SetOperator& d,
                                                      std::uint64_t seed, std::size_t samples) {
  if (universe <= kExhaustiveAxiomLimit) return check_exhaustive(universe, d);
  return check_sampled(universe, d, seed, samples);
}

std::optional<AxiomViolation> check_derivative_axioms(const Model& m, const std::string& agent) {
  const Relation& r = m.agent(agent).relation;
  return check_derivative_axioms(m.size(), [&r](const PointSet& a) { return r.preimage(a); });
}

}  // namespace tpdl
