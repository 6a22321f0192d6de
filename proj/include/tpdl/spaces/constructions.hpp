#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tpdl/spaces/model.hpp"

namespace tpdl {

/// Every agent's relation replaced by its reflexive-transitive closure (kind S4).
Model reflexive_transitive_closure(const Model& m);

/// Every agent's relation replaced by its transitive closure (kind K4).
Model transitive_closure(const Model& m);

/// A map between two models claimed to be a p-morphism for `agents`.
struct PMorphismWitness {
  Model source;
  Model target;
  std::vector<PointId> map;  // source point -> target point
  std::vector<std::string> agents;
};

struct PMorphismCheck {
  bool require_surjective = true;
  /// Source points where the back condition is required; all points if unset.
  std::optional<PointSet> back_domain;
};

/// nullopt iff the witness map is total, agrees on every atom of the target,
/// and satisfies forth (x R y implies f(x) R f(y)) and back (f(x) R v implies
/// x R y for some y with f(y) = v) for every listed agent. Otherwise a
/// description of the first failure.
std::optional<std::string> check_p_morphism(const PMorphismWitness& w, const PMorphismCheck& options = {});

struct Resolution {
  Model model;
  PMorphismWitness witness;
};

/// Replaces each point that is reflexive for some agent by two copies (w,0),
/// (w,1) with (w,i) R' (v,j) iff (w != v and w R v) or (w == v, w R w and
/// i != j). The result is irreflexive and weakly transitive for every agent,
/// has at most twice as many points, and projects onto `m` by a surjective
/// p-morphism.
///
/// Throws PreconditionError if some relation is not weakly transitive, or if
/// a copied point lies in a nontrivial cluster of an agent for which it is
/// irreflexive (no two-copy resolution exists there).
Resolution irreflexive_resolution(const Model& m);

/// The submodel on `u`. Throws PreconditionError unless `u` is open for every
/// agent in `agents`.
Model restrict_to_open(const Model& m, const PointSet& u, const std::vector<std::string>& agents);

struct Unwinding {
  Model model;
  std::vector<PointId> label;  // node -> last point of its path
  std::vector<std::size_t> length;  // node -> number of points on its path
};

/// Unravels the part of `m` generated by `root` into paths of at most
/// `max_length` points. Every step of a path is labelled by the agent whose
/// edge it follows; a path sees its proper extensions made only of that
/// agent's steps. The resulting relations are transitive and irreflexive, and
/// the label map satisfies forth everywhere and back at paths shorter than
/// `max_length`.
///
/// Throws PreconditionError unless every relation of `m` is transitive and
/// max_length >= 1.
Unwinding bounded_unwinding(const Model& m, PointId root, std::size_t max_length);

}  // namespace tpdl
