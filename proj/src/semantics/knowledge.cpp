#include "tpdl/semantics/knowledge.hpp"

#include <algorithm>

#include "tpdl/error.hpp"
#include "tpdl/semantics/eval.hpp"

namespace tpdl::semantics {

using syntax::Formula;
using syntax::Program;

Program group_program(const std::vector<std::string>& agents) {
  if (agents.empty()) throw PreconditionError("common knowledge needs at least one agent");
  Program p = Program::atom(agents.front());
  for (std::size_t i = 1; i < agents.size(); ++i) p = Program::choice(std::move(p), Program::atom(agents[i]));
  return Program::star(std::move(p));
}

Formula common_knowledge(const std::vector<std::string>& agents, const Formula& f) {
  return Formula::box(group_program(agents), f);
}

bool CommonKnowledgeReport::jointly_open() const {
  return std::all_of(open_for.begin(), open_for.end(), [](const auto& entry) { return entry.second; });
}

std::optional<PointSet> CommonKnowledgeReport::witness(PointId x) const {
  if (!truth.contains(x) || !jointly_open()) return std::nullopt;
  return truth;
}

CommonKnowledgeReport common_knowledge_open_check(const Model& m, const std::vector<std::string>& agents,
                                                  const Formula& f) {
  CommonKnowledgeReport report{agents, evaluate(m, common_knowledge(agents, f)), {}};
  for (const auto& a : agents) report.open_for.emplace_back(a, is_open(m, a, report.truth));
  return report;
}

Formula two_for(const std::string& agent, const std::string& whole) {
  const Program i = Program::atom(agent);
  const Formula w = Formula::prop(whole);
  const Formula not_w = Formula::negation(w);
  return Formula::conj(Formula::implies(w, Formula::conj(Formula::box(i, not_w), Formula::diamond(i, not_w))),
                       Formula::implies(not_w, Formula::conj(Formula::box(i, w), Formula::diamond(i, w))));
}

Formula two_formula(const std::string& a, const std::string& b, const std::string& whole) {
  if (a == b) throw PreconditionError("Two needs two distinct agents");
  return Formula::conj(two_for(a, whole), two_for(b, whole));
}

bool validates_two(const Model& m, const std::string& a, const std::string& b, const std::string& whole) {
  return validates(m, two_formula(a, b, whole));
}

SuccessorExtraction extract_successor(const Model& m, const std::string& agent) {
  std::vector<PointSet> neighbourhood;
  for (PointId x = 0; x < m.size(); ++x) neighbourhood.push_back(least_neighbourhood(m, agent, x));

  // {x, y} is an atomic open containing x iff it is the least neighbourhood of
  // both of its points.
  std::vector<PointId> partner(m.size());
  for (PointId x = 0; x < m.size(); ++x) {
    const PointSet& u = neighbourhood[x];
    if (u.count() != 2) {
      return {std::nullopt, x,
              "least " + agent + "-neighbourhood of " + m.point_name(x) + " has " + std::to_string(u.count()) +
                  " points, not 2"};
    }
    PointId y = 0;
    u.for_each([&](PointId p) {
      if (p != x) y = p;
    });
    if (neighbourhood[y] != u) {
      return {std::nullopt, x,
              "{" + m.point_name(x) + ", " + m.point_name(y) + "} is not atomic for " + agent};
    }
    partner[x] = y;
  }
  return {std::move(partner), std::nullopt, {}};
}

bool is_bijection(const std::vector<PointId>& f) {
  std::vector<bool> hit(f.size(), false);
  for (PointId y : f) {
    if (y >= f.size() || hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

std::vector<PointId> compose(const std::vector<PointId>& first, const std::vector<PointId>& second) {
  std::vector<PointId> out(first.size());
  for (PointId x = 0; x < first.size(); ++x) out[x] = second.at(first[x]);
  return out;
}

}  // namespace tpdl::semantics
