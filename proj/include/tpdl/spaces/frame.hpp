#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tpdl/spaces/point_set.hpp"

namespace tpdl {

/// A binary relation on {0, ..., size-1}, stored as one successor set per point.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t size);
  static Relation from_pairs(std::size_t size, const std::vector<std::pair<PointId, PointId>>& pairs);
  static Relation identity(std::size_t size);

  std::size_t size() const noexcept { return successors_.size(); }
  bool has(PointId from, PointId to) const { return successors_.at(from).contains(to); }
  void add(PointId from, PointId to) { successors_.at(from).insert(to); }
  void remove(PointId from, PointId to) { successors_.at(from).erase(to); }
  const PointSet& successors(PointId from) const { return successors_.at(from); }
  std::size_t edge_count() const;

  /// {w : w R s for some s in targets}.
  PointSet preimage(const PointSet& targets) const;
  std::vector<std::pair<PointId, PointId>> pairs() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<PointSet> successors_;
};

/// Relational frame classes. `Any` imposes nothing; it is used for plain
/// Kripke models.
enum class FrameKind { Any, WK4, K4, S4, Equivalence, IrreflexiveWK4, MonadicDerivative };

/// File-format name: "k", "wk4", "k4", "s4", "equiv", "irr-wk4", "monadic-derivative".
std::string_view kind_name(FrameKind kind) noexcept;
std::optional<FrameKind> parse_kind(std::string_view name) noexcept;
const std::vector<FrameKind>& all_kinds();

/// First failure of a frame property, with the points that witness it.
struct FrameViolation {
  std::string property;  // "reflexivity", "irreflexivity", "symmetry", "transitivity", "weak transitivity"
  std::vector<PointId> witness;

  std::string describe(const std::vector<std::string>& point_names = {}) const;
};

/// nullopt iff `rel` has every defining property of `kind`:
///   WK4                 w R s R t and w != t implies w R t
///   K4                  transitive
///   S4                  reflexive and transitive
///   Equivalence         reflexive, symmetric, transitive
///   IrreflexiveWK4      irreflexive and weakly transitive
///   MonadicDerivative   irreflexive, symmetric, weakly transitive
std::optional<FrameViolation> validate_frame(const Relation& rel, FrameKind kind);

/// Warshall closures.
Relation transitive_closure(const Relation& rel);
Relation reflexive_transitive_closure(const Relation& rel);

}  // namespace tpdl
