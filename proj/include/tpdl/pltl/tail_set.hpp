#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tpdl/syntax/ast.hpp"

namespace tpdl::pltl {

/// An eventually constant subset of the integers: a left tail covering every
/// z < lo, an explicit window [lo, hi], and a right tail covering every z > hi.
///
/// The representation is canonical: the first window bit differs from the left
/// tail and the last one from the right tail. An empty window still records
/// where the two tails meet when they differ; when they agree lo is 0.
class TailSet {
 public:
  TailSet() = default;

  /// Canonicalises an arbitrary (left, lo, bits, right) description.
  TailSet(bool left, std::int64_t lo, std::vector<bool> bits, bool right);

  static TailSet none() { return {}; }
  static TailSet integers() { return TailSet(true, 0, {}, true); }
  static TailSet of(std::initializer_list<std::int64_t> members);
  /// (-inf, z] and [z, +inf).
  static TailSet at_most(std::int64_t z);
  static TailSet at_least(std::int64_t z);

  bool left_tail() const noexcept { return left_; }
  bool right_tail() const noexcept { return right_; }
  std::int64_t lo() const noexcept { return lo_; }
  /// lo - 1 for an empty window.
  std::int64_t hi() const noexcept { return lo_ + static_cast<std::int64_t>(bits_.size()) - 1; }
  const std::vector<bool>& window() const noexcept { return bits_; }

  bool contains(std::int64_t z) const noexcept;
  bool empty() const noexcept { return !left_ && !right_ && bits_.empty(); }
  bool is_all() const noexcept { return left_ && right_ && bits_.empty(); }
  /// Greatest member; nullopt if empty or unbounded above.
  std::optional<std::int64_t> max() const noexcept;
  /// Least member; nullopt if empty or unbounded below.
  std::optional<std::int64_t> min() const noexcept;

  TailSet complement() const;
  /// {z + k : z in this}.
  TailSet shifted(std::int64_t k) const;
  friend TailSet operator|(const TailSet& a, const TailSet& b);
  friend TailSet operator&(const TailSet& a, const TailSet& b);
  friend bool operator==(const TailSet&, const TailSet&) = default;

  /// Maximal intervals, e.g. "(-inf, 0] u {3} u [5, +inf)"; "{}" when empty.
  std::string to_string() const;

 private:
  template <class Op>
  static TailSet combine(const TailSet& a, const TailSet& b, Op op);

  bool left_ = false;
  std::int64_t lo_ = 0;
  std::vector<bool> bits_;
  bool right_ = false;
};

std::ostream& operator<<(std::ostream& os, const TailSet& s);

/// A model over the integers with successor z + 1 and eventually constant
/// truth sets.
class TailModel {
 public:
  void set_valuation(const std::string& atom, TailSet truth);
  /// Throws UnknownIdentifier.
  const TailSet& valuation(const std::string& atom) const;
  std::vector<std::string> atom_names() const;

 private:
  std::vector<std::pair<std::string, TailSet>> valuation_;
};

/// Exact truth set over the integers:
///   X A = A shifted by -1, Y A = A shifted by +1,
///   F A = Z if A has a right tail, else (-inf, max A], or empty,
///   P A = Z if A has a left tail, else [min A, +inf), or empty.
TailSet eval_pltl_tail(const TailModel& m, const syntax::PltlFormula& f);

}  // namespace tpdl::pltl
