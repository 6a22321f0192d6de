#include "tpdl/pltl/tail_set.hpp"

#include <algorithm>
#include <sstream>

#include "tpdl/error.hpp"

namespace tpdl::pltl {

TailSet::TailSet(bool left, std::int64_t lo, std::vector<bool> bits, bool right) : left_(left), right_(right) {
  const auto len = static_cast<std::int64_t>(bits.size());
  std::int64_t first = 0;
  while (first < len && bits[static_cast<std::size_t>(first)] == left) ++first;
  std::int64_t last = len - 1;
  while (last >= 0 && bits[static_cast<std::size_t>(last)] == right) --last;

  if (first <= last) {
    lo_ = lo + first;
    bits_.assign(bits.begin() + first, bits.begin() + last + 1);
  } else if (left != right) {
    // Every bit equals one of the tails, so the window collapses onto the
    // boundary between them.
    lo_ = lo + first;
  } else {
    lo_ = 0;
  }
}

TailSet TailSet::of(std::initializer_list<std::int64_t> members) {
  if (members.size() == 0) return none();
  const auto [lo, hi] = std::minmax(members);
  std::vector<bool> bits(static_cast<std::size_t>(hi - lo + 1), false);
  for (auto z : members) bits[static_cast<std::size_t>(z - lo)] = true;
  return TailSet(false, lo, std::move(bits), false);
}

TailSet TailSet::at_most(std::int64_t z) { return TailSet(true, z + 1, {}, false); }
TailSet TailSet::at_least(std::int64_t z) { return TailSet(false, z, {}, true); }

bool TailSet::contains(std::int64_t z) const noexcept {
  if (z < lo_) return left_;
  if (z > hi()) return right_;
  return bits_[static_cast<std::size_t>(z - lo_)];
}

std::optional<std::int64_t> TailSet::max() const noexcept {
  if (right_ || empty()) return std::nullopt;
  // Canonical form: the last window bit differs from the (absent) right tail.
  return bits_.empty() ? lo_ - 1 : hi();
}

std::optional<std::int64_t> TailSet::min() const noexcept {
  if (left_ || empty()) return std::nullopt;
  return lo_;
}

TailSet TailSet::complement() const {
  std::vector<bool> bits(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) bits[i] = !bits_[i];
  return TailSet(!left_, lo_, std::move(bits), !right_);
}

TailSet TailSet::shifted(std::int64_t k) const {
  TailSet out = *this;
  if (!(left_ == right_ && bits_.empty())) out.lo_ += k;
  return out;
}

template <class Op>
TailSet TailSet::combine(const TailSet& a, const TailSet& b, Op op) {
  const std::int64_t lo = std::min(a.lo_, b.lo_);
  const std::int64_t hi = std::max(a.hi(), b.hi());
  std::vector<bool> bits;
  for (std::int64_t z = lo; z <= hi; ++z) bits.push_back(op(a.contains(z), b.contains(z)));
  return TailSet(op(a.left_, b.left_), lo, std::move(bits), op(a.right_, b.right_));
}

TailSet operator|(const TailSet& a, const TailSet& b) {
  return TailSet::combine(a, b, [](bool x, bool y) { return x || y; });
}

TailSet operator&(const TailSet& a, const TailSet& b) {
  return TailSet::combine(a, b, [](bool x, bool y) { return x && y; });
}

std::string TailSet::to_string() const {
  if (empty()) return "{}";
  if (is_all()) return "(-inf, +inf)";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](std::optional<std::int64_t> from, std::optional<std::int64_t> to) {
    os << (first ? "" : " u ");
    first = false;
    if (from && to && *from == *to) {
      os << '{' << *from << '}';
      return;
    }
    os << (from ? "[" + std::to_string(*from) : "(-inf") << ", " << (to ? std::to_string(*to) + "]" : "+inf)");
  };

  // Walk the maximal runs, starting from the left tail.
  std::optional<std::int64_t> run_start;
  bool in_run = left_;
  for (std::int64_t z = lo_; z <= hi() + 1; ++z) {
    const bool member = z <= hi() ? contains(z) : right_;
    if (member && !in_run) {
      run_start = z;
      in_run = true;
    } else if (!member && in_run) {
      emit(run_start, z - 1);
      in_run = false;
    }
  }
  if (in_run) emit(run_start, std::nullopt);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TailSet& s) { return os << s.to_string(); }

void TailModel::set_valuation(const std::string& atom, TailSet truth) {
  for (auto& [name, set] : valuation_) {
    if (name == atom) {
      set = std::move(truth);
      return;
    }
  }
  valuation_.emplace_back(atom, std::move(truth));
}

const TailSet& TailModel::valuation(const std::string& atom) const {
  for (const auto& [name, set] : valuation_) {
    if (name == atom) return set;
  }
  throw UnknownIdentifier("unknown atom '" + atom + "'");
}

std::vector<std::string> TailModel::atom_names() const {
  std::vector<std::string> out;
  for (const auto& v : valuation_) out.push_back(v.first);
  return out;
}

TailSet eval_pltl_tail(const TailModel& m, const syntax::PltlFormula& f) {
  using K = syntax::PltlFormula::Kind;
  switch (f.kind()) {
    case K::True: return TailSet::integers();
    case K::False: return TailSet::none();
    case K::Prop: return m.valuation(f.name());
    case K::Not: return eval_pltl_tail(m, f.operand()).complement();
    case K::And: return eval_pltl_tail(m, f.left()) & eval_pltl_tail(m, f.right());
    case K::Or: return eval_pltl_tail(m, f.left()) | eval_pltl_tail(m, f.right());
    case K::Implies: return eval_pltl_tail(m, f.left()).complement() | eval_pltl_tail(m, f.right());
    case K::Next: return eval_pltl_tail(m, f.operand()).shifted(-1);
    case K::Yesterday: return eval_pltl_tail(m, f.operand()).shifted(1);
    case K::Future: {
      const TailSet a = eval_pltl_tail(m, f.operand());
      if (a.right_tail()) return TailSet::integers();
      if (a.empty()) return TailSet::none();
      return TailSet::at_most(*a.max());
    }
    case K::Past: {
      const TailSet a = eval_pltl_tail(m, f.operand());
      if (a.left_tail()) return TailSet::integers();
      if (a.empty()) return TailSet::none();
      return TailSet::at_least(*a.min());
    }
  }
  return TailSet::none();
}

}  // namespace tpdl::pltl
