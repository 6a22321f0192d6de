#include "tpdl/spaces/model.hpp"

#include <algorithm>
#include <set>

#include "tpdl/error.hpp"

namespace tpdl {

Model::Model(std::vector<std::string> points) : points_(std::move(points)) {
  std::set<std::string> seen;
  for (const auto& p : points_) {
    if (!seen.insert(p).second) throw PreconditionError("duplicate point '" + p + "'");
  }
}

Model Model::with_points(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return Model(std::move(names));
}

std::optional<PointId> Model::find_point(const std::string& name) const {
  auto it = std::find(points_.begin(), points_.end(), name);
  if (it == points_.end()) return std::nullopt;
  return static_cast<PointId>(it - points_.begin());
}

PointId Model::point(const std::string& name) const {
  if (auto p = find_point(name)) return *p;
  throw UnknownIdentifier("unknown point '" + name + "'");
}

void Model::set_agent(const std::string& name, FrameKind kind, Relation relation) {
  if (relation.size() != size()) {
    throw PreconditionError("relation for agent '" + name + "' has " + std::to_string(relation.size()) +
                            " points, model has " + std::to_string(size()));
  }
  if (has_atom(name)) throw PreconditionError("'" + name + "' is already an atom");
  if (auto v = validate_frame(relation, kind)) {
    throw FrameError("agent '" + name + "' is not " + std::string(kind_name(kind)) + ": " + v->describe(points_));
  }
  for (auto& a : agents_) {
    if (a.name == name) {
      a.kind = kind;
      a.relation = std::move(relation);
      return;
    }
  }
  agents_.push_back({name, kind, std::move(relation)});
}

bool Model::has_agent(const std::string& name) const noexcept {
  return std::any_of(agents_.begin(), agents_.end(), [&](const AgentFrame& a) { return a.name == name; });
}

const AgentFrame& Model::agent(const std::string& name) const {
  for (const auto& a : agents_) {
    if (a.name == name) return a;
  }
  throw UnknownIdentifier("unknown agent '" + name + "'");
}

std::vector<std::string> Model::agent_names() const {
  std::vector<std::string> out;
  for (const auto& a : agents_) out.push_back(a.name);
  return out;
}

void Model::set_valuation(const std::string& atom, PointSet truth) {
  if (truth.universe() != size()) {
    throw PreconditionError("valuation of '" + atom + "' is over a carrier of size " +
                            std::to_string(truth.universe()) + ", model has " + std::to_string(size()));
  }
  if (has_agent(atom)) throw PreconditionError("'" + atom + "' is already an agent");
  for (auto& [name, set] : valuation_) {
    if (name == atom) {
      set = std::move(truth);
      return;
    }
  }
  valuation_.emplace_back(atom, std::move(truth));
}

bool Model::has_atom(const std::string& name) const noexcept {
  return std::any_of(valuation_.begin(), valuation_.end(), [&](const auto& v) { return v.first == name; });
}

const PointSet& Model::valuation(const std::string& atom) const {
  for (const auto& [name, set] : valuation_) {
    if (name == atom) return set;
  }
  throw UnknownIdentifier("unknown atom '" + atom + "'");
}

std::vector<std::string> Model::atom_names() const {
  std::vector<std::string> out;
  for (const auto& v : valuation_) out.push_back(v.first);
  return out;
}

bool operator==(const Model& lhs, const Model& rhs) {
  if (lhs.points_ != rhs.points_ || lhs.agents_.size() != rhs.agents_.size() ||
      lhs.valuation_.size() != rhs.valuation_.size()) {
    return false;
  }
  for (const auto& a : lhs.agents_) {
    if (!rhs.has_agent(a.name)) return false;
    const auto& b = rhs.agent(a.name);
    if (a.kind != b.kind || !(a.relation == b.relation)) return false;
  }
  for (const auto& [name, set] : lhs.valuation_) {
    if (!rhs.has_atom(name) || rhs.valuation(name) != set) return false;
  }
  return true;
}

PointSet derivative(const Model& m, const std::string& agent, const PointSet& a) {
  return m.agent(agent).relation.preimage(a);
}

PointSet closure(const Model& m, const std::string& agent, const PointSet& a) {
  return a | derivative(m, agent, a);
}

PointSet interior(const Model& m, const std::string& agent, const PointSet& a) {
  return closure(m, agent, a.complement()).complement();
}

bool is_open(const Model& m, const std::string& agent, const PointSet& a) { return interior(m, agent, a) == a; }

PointSet least_neighbourhood(const Model& m, const std::string& agent, PointId p) {
  const Relation& r = m.agent(agent).relation;
  PointSet reached = PointSet::singleton(m.size(), p);
  PointSet frontier = reached;
  while (!frontier.empty()) {
    PointSet next(m.size());
    frontier.for_each([&](PointId w) { next |= r.successors(w); });
    frontier = next - reached;
    reached |= next;
  }
  return reached;
}

std::vector<PointSet> atomic_opens(const Model& m, const std::string& agent) {
  std::vector<PointSet> neighbourhoods;
  for (PointId p = 0; p < m.size(); ++p) neighbourhoods.push_back(least_neighbourhood(m, agent, p));

  // A least neighbourhood is atomic iff every member has the same one.
  std::vector<PointSet> out;
  for (PointId p = 0; p < m.size(); ++p) {
    const PointSet& u = neighbourhoods[p];
    bool atomic = true;
    u.for_each([&](PointId q) { atomic = atomic && neighbourhoods[q] == u; });
    if (atomic && std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
  }
  return out;
}

}  // namespace tpdl
