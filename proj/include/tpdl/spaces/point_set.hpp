#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace tpdl {

/// Index of a point inside a model's carrier.
using PointId = std::size_t;

/// A subset of a finite carrier {0, ..., universe-1}, stored as a bitmask.
///
/// Carriers of up to 64 points live inline without allocation, which is the
/// common case for the exhaustive searches. Binary operations require both
/// operands to share the same universe.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe);
  PointSet(std::size_t universe, std::initializer_list<PointId> members);

  static PointSet full(std::size_t universe);
  static PointSet singleton(std::size_t universe, PointId p);
  /// Builds a set from the low `universe` bits of `mask`; requires universe <= 64.
  static PointSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(PointId p) const noexcept {
    return p < universe_ && ((words_[p / 64] >> (p % 64)) & 1U) != 0;
  }
  void insert(PointId p);
  void erase(PointId p);

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept { return count() == universe_; }
  bool intersects(const PointSet& other) const noexcept;
  bool is_subset_of(const PointSet& other) const noexcept;

  PointSet complement() const;
  PointSet& operator|=(const PointSet& other);
  PointSet& operator&=(const PointSet& other);
  PointSet& operator-=(const PointSet& other);

  friend PointSet operator|(PointSet lhs, const PointSet& rhs) { return lhs |= rhs; }
  friend PointSet operator&(PointSet lhs, const PointSet& rhs) { return lhs &= rhs; }
  friend PointSet operator-(PointSet lhs, const PointSet& rhs) { return lhs -= rhs; }

  friend bool operator==(const PointSet& lhs, const PointSet& rhs) noexcept;
  friend std::strong_ordering operator<=>(const PointSet& lhs, const PointSet& rhs) noexcept;

  /// Low 64 bits; requires universe <= 64.
  std::uint64_t to_mask() const;
  std::vector<PointId> members() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        fn(static_cast<PointId>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
  }

 private:
  void trim() noexcept;

  std::size_t universe_ = 0;
  boost::container::small_vector<std::uint64_t, 1> words_;
};

std::ostream& operator<<(std::ostream& os, const PointSet& set);

}  // namespace tpdl
