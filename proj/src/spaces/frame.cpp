#include "tpdl/spaces/frame.hpp"

#include <array>
#include <sstream>

namespace tpdl {

Relation::Relation(std::size_t size) : successors_(size, PointSet(size)) {}

Relation Relation::from_pairs(std::size_t size, const std::vector<std::pair<PointId, PointId>>& pairs) {
  Relation r(size);
  for (const auto& [from, to] : pairs) r.add(from, to);
  return r;
}

Relation Relation::identity(std::size_t size) {
  Relation r(size);
  for (PointId p = 0; p < size; ++p) r.add(p, p);
  return r;
}

std::size_t Relation::edge_count() const {
  std::size_t n = 0;
  for (const auto& s : successors_) n += s.count();
  return n;
}

PointSet Relation::preimage(const PointSet& targets) const {
  PointSet out(size());
  for (PointId w = 0; w < size(); ++w) {
    if (successors_[w].intersects(targets)) out.insert(w);
  }
  return out;
}

std::vector<std::pair<PointId, PointId>> Relation::pairs() const {
  std::vector<std::pair<PointId, PointId>> out;
  for (PointId w = 0; w < size(); ++w) {
    successors_[w].for_each([&](PointId s) { out.emplace_back(w, s); });
  }
  return out;
}

namespace {

constexpr std::array<std::pair<FrameKind, std::string_view>, 7> kKindNames{{
    {FrameKind::Any, "k"},
    {FrameKind::WK4, "wk4"},
    {FrameKind::K4, "k4"},
    {FrameKind::S4, "s4"},
    {FrameKind::Equivalence, "equiv"},
    {FrameKind::IrreflexiveWK4, "irr-wk4"},
    {FrameKind::MonadicDerivative, "monadic-derivative"},
}};

std::optional<FrameViolation> check_reflexive(const Relation& r) {
  for (PointId w = 0; w < r.size(); ++w) {
    if (!r.has(w, w)) return FrameViolation{"reflexivity", {w}};
  }
  return std::nullopt;
}

std::optional<FrameViolation> check_irreflexive(const Relation& r) {
  for (PointId w = 0; w < r.size(); ++w) {
    if (r.has(w, w)) return FrameViolation{"irreflexivity", {w}};
  }
  return std::nullopt;
}

std::optional<FrameViolation> check_symmetric(const Relation& r) {
  for (const auto& [w, s] : r.pairs()) {
    if (!r.has(s, w)) return FrameViolation{"symmetry", {w, s}};
  }
  return std::nullopt;
}

// w R s R t  implies  w R t  (weak: unless w == t).
std::optional<FrameViolation> check_transitive(const Relation& r, bool weak) {
  for (PointId w = 0; w < r.size(); ++w) {
    std::optional<FrameViolation> found;
    r.successors(w).for_each([&](PointId s) {
      if (found) return;
      const PointSet missing = r.successors(s) - r.successors(w);
      missing.for_each([&](PointId t) {
        if (found || (weak && t == w)) return;
        found = FrameViolation{weak ? "weak transitivity" : "transitivity", {w, s, t}};
      });
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace

std::string_view kind_name(FrameKind kind) noexcept {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<FrameKind> parse_kind(std::string_view name) noexcept {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

const std::vector<FrameKind>& all_kinds() {
  static const std::vector<FrameKind> kinds = [] {
    std::vector<FrameKind> out;
    for (const auto& entry : kKindNames) out.push_back(entry.first);
    return out;
  }();
  return kinds;
}

std::string FrameViolation::describe(const std::vector<std::string>& point_names) const {
  std::ostringstream os;
  os << property << " fails at (";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i != 0) os << ", ";
    if (witness[i] < point_names.size()) {
      os << point_names[witness[i]];
    } else {
      os << witness[i];
    }
  }
  os << ')';
  return os.str();
}

std::optional<FrameViolation> validate_frame(const Relation& rel, FrameKind kind) {
  std::optional<FrameViolation> v;
  switch (kind) {
    case FrameKind::Any: return std::nullopt;
    case FrameKind::WK4: return check_transitive(rel, true);
    case FrameKind::K4: return check_transitive(rel, false);
    case FrameKind::S4:
      if ((v = check_reflexive(rel))) return v;
      return check_transitive(rel, false);
    case FrameKind::Equivalence:
      if ((v = check_reflexive(rel))) return v;
      if ((v = check_symmetric(rel))) return v;
      return check_transitive(rel, false);
    case FrameKind::IrreflexiveWK4:
      if ((v = check_irreflexive(rel))) return v;
      return check_transitive(rel, true);
    case FrameKind::MonadicDerivative:
      if ((v = check_irreflexive(rel))) return v;
      if ((v = check_symmetric(rel))) return v;
      return check_transitive(rel, true);
  }
  return std::nullopt;
}

Relation transitive_closure(const Relation& rel) {
  Relation out = rel;
  const std::size_t n = rel.size();
  for (PointId k = 0; k < n; ++k) {
    for (PointId i = 0; i < n; ++i) {
      if (out.has(i, k)) {
        PointSet row = out.successors(i) | out.successors(k);
        for (PointId j : row.members()) out.add(i, j);
      }
    }
  }
  return out;
}

Relation reflexive_transitive_closure(const Relation& rel) {
  Relation out = transitive_closure(rel);
  for (PointId p = 0; p < rel.size(); ++p) out.add(p, p);
  return out;
}

}  // namespace tpdl
