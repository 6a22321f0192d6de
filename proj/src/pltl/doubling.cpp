#include "tpdl/pltl/doubling.hpp"

#include "tpdl/error.hpp"

namespace tpdl::pltl {

Doubling doubling(const BijectiveModel& m, const std::string& a, const std::string& b, const std::string& whole) {
  if (a == b) throw PreconditionError("doubling needs two distinct agents");
  if (m.has_atom(whole)) throw PreconditionError("'" + whole + "' already occurs in the bijective model");

  const std::size_t n = m.size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i) + "'");
  auto whole_point = [](std::size_t i) { return i; };
  auto half_point = [n](std::size_t i) { return n + i; };

  Relation ra(2 * n);
  Relation rb(2 * n);
  auto link = [](Relation& r, PointId x, PointId y) {
    if (x == y) return;
    r.add(x, y);
    r.add(y, x);
  };
  for (std::size_t i = 0; i < n; ++i) {
    link(ra, whole_point(i), half_point(i));
    link(rb, half_point(i), whole_point(m.succ(i)));
  }

  Doubling out{Model(std::move(names)), {}};
  out.model.set_agent(a, FrameKind::MonadicDerivative, std::move(ra));
  out.model.set_agent(b, FrameKind::MonadicDerivative, std::move(rb));

  PointSet wholes(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    wholes.insert(whole_point(i));
    out.embedding.push_back(whole_point(i));
  }
  out.model.set_valuation(whole, wholes);
  for (const auto& atom : m.atom_names()) {
    PointSet truth(2 * n);
    m.valuation(atom).for_each([&](PointId i) { truth.insert(whole_point(i)); });
    out.model.set_valuation(atom, std::move(truth));
  }
  return out;
}

}  // namespace tpdl::pltl
