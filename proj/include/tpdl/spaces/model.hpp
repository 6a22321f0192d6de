#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tpdl/spaces/frame.hpp"
#include "tpdl/spaces/point_set.hpp"

namespace tpdl {

/// One agent's accessibility relation together with its declared frame kind.
struct AgentFrame {
  std::string name;
  FrameKind kind = FrameKind::Any;
  Relation relation;
};

/// A finite polyderivative model: named points, one validated relation per
/// agent, and a valuation of atoms.
///
/// Each agent's derivative is the relational preimage d(A) = {w : w R s in A},
/// whatever the declared kind; the kind is checked metadata that says which
/// results apply. Points, agents and atoms keep their declaration order.
class Model {
 public:
  Model() = default;
  /// Throws PreconditionError on duplicate point names.
  explicit Model(std::vector<std::string> points);
  /// Points named "0", "1", ...
  static Model with_points(std::size_t n);

  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::string& point_name(PointId p) const { return points_.at(p); }
  std::optional<PointId> find_point(const std::string& name) const;
  /// Throws UnknownIdentifier.
  PointId point(const std::string& name) const;

  PointSet empty_set() const { return PointSet(size()); }
  PointSet full_set() const { return PointSet::full(size()); }

  /// Adds or replaces an agent. Throws FrameError naming the witness if
  /// `relation` violates `kind`, PreconditionError on size mismatch or a name
  /// clash with an atom.
  void set_agent(const std::string& name, FrameKind kind, Relation relation);
  bool has_agent(const std::string& name) const noexcept;
  /// Throws UnknownIdentifier.
  const AgentFrame& agent(const std::string& name) const;
  const std::vector<AgentFrame>& agents() const noexcept { return agents_; }
  std::vector<std::string> agent_names() const;

  /// Adds or replaces an atom's truth set.
  void set_valuation(const std::string& atom, PointSet truth);
  bool has_atom(const std::string& name) const noexcept;
  /// Throws UnknownIdentifier.
  const PointSet& valuation(const std::string& atom) const;
  std::vector<std::string> atom_names() const;

  friend bool operator==(const Model&, const Model&);

 private:
  std::vector<std::string> points_;
  std::vector<AgentFrame> agents_;
  std::vector<std::pair<std::string, PointSet>> valuation_;
};

// Topological view of one agent. The closure is c(A) = A u d(A); a set is
// open iff it equals its interior, which for a relational derivative means it
// is closed under taking successors.

PointSet derivative(const Model& m, const std::string& agent, const PointSet& a);
PointSet closure(const Model& m, const std::string& agent, const PointSet& a);
PointSet interior(const Model& m, const std::string& agent, const PointSet& a);
bool is_open(const Model& m, const std::string& agent, const PointSet& a);
/// Least open neighbourhood of `p`: the points reachable from `p` in zero or more steps.
PointSet least_neighbourhood(const Model& m, const std::string& agent, PointId p);
/// Minimal nonempty open sets, ordered by their smallest point.
std::vector<PointSet> atomic_opens(const Model& m, const std::string& agent);

}  // namespace tpdl
