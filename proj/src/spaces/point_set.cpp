#include "tpdl/spaces/point_set.hpp"

#include <algorithm>

#include "tpdl/error.hpp"

namespace tpdl {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

void check_same_universe(const PointSet& a, const PointSet& b) {
  if (a.universe() != b.universe()) {
    throw PreconditionError("point sets over different carriers (" + std::to_string(a.universe()) +
                            " vs " + std::to_string(b.universe()) + ")");
  }
}

}  // namespace

PointSet::PointSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

PointSet::PointSet(std::size_t universe, std::initializer_list<PointId> members) : PointSet(universe) {
  for (PointId p : members) insert(p);
}

PointSet PointSet::full(std::size_t universe) {
  PointSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.trim();
  return s;
}

PointSet PointSet::singleton(std::size_t universe, PointId p) {
  PointSet s(universe);
  s.insert(p);
  return s;
}

PointSet PointSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw PreconditionError("from_mask requires a carrier of at most 64 points");
  PointSet s(universe);
  if (universe > 0) {
    s.words_[0] = mask;
    s.trim();
  }
  return s;
}

void PointSet::insert(PointId p) {
  if (p >= universe_) {
    throw PreconditionError("point " + std::to_string(p) + " outside carrier of size " +
                            std::to_string(universe_));
  }
  words_[p / 64] |= std::uint64_t{1} << (p % 64);
}

void PointSet::erase(PointId p) {
  if (p < universe_) words_[p / 64] &= ~(std::uint64_t{1} << (p % 64));
}

std::size_t PointSet::count() const noexcept {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool PointSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool PointSet::intersects(const PointSet& other) const noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool PointSet::is_subset_of(const PointSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t theirs = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~theirs) != 0) return false;
  }
  return true;
}

PointSet PointSet::complement() const {
  PointSet s(*this);
  for (auto& w : s.words_) w = ~w;
  s.trim();
  return s;
}

PointSet& PointSet::operator|=(const PointSet& other) {
  check_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

PointSet& PointSet::operator&=(const PointSet& other) {
  check_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

PointSet& PointSet::operator-=(const PointSet& other) {
  check_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool operator==(const PointSet& lhs, const PointSet& rhs) noexcept {
  return lhs.universe_ == rhs.universe_ && std::equal(lhs.words_.begin(), lhs.words_.end(), rhs.words_.begin());
}

std::strong_ordering operator<=>(const PointSet& lhs, const PointSet& rhs) noexcept {
  if (auto c = lhs.universe_ <=> rhs.universe_; c != 0) return c;
  for (std::size_t i = lhs.words_.size(); i-- > 0;) {
    if (auto c = lhs.words_[i] <=> rhs.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::uint64_t PointSet::to_mask() const {
  if (universe_ > 64) throw PreconditionError("to_mask requires a carrier of at most 64 points");
  return words_.empty() ? 0 : words_[0];
}

std::vector<PointId> PointSet::members() const {
  std::vector<PointId> out;
  out.reserve(count());
  for_each([&](PointId p) { out.push_back(p); });
  return out;
}

void PointSet::trim() noexcept {
  if (universe_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }
}

std::ostream& operator<<(std::ostream& os, const PointSet& set) {
  os << '{';
  bool first = true;
  set.for_each([&](PointId p) {
    os << (first ? "" : ", ") << p;
    first = false;
  });
  return os << '}';
}

}  // namespace tpdl
