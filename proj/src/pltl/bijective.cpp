#include "tpdl/pltl/bijective.hpp"

#include <algorithm>

#include "tpdl/error.hpp"

namespace tpdl::pltl {

using syntax::PltlFormula;

BijectiveModel::BijectiveModel(std::vector<std::size_t> succ) : succ_(std::move(succ)), pred_(succ_.size()) {
  std::vector<bool> hit(succ_.size(), false);
  for (std::size_t x = 0; x < succ_.size(); ++x) {
    const std::size_t y = succ_[x];
    if (y >= succ_.size()) throw PreconditionError("successor of " + std::to_string(x) + " is out of range");
    if (hit[y]) throw PreconditionError("successor is not injective: " + std::to_string(y) + " is hit twice");
    hit[y] = true;
    pred_[y] = x;
  }
}

void BijectiveModel::set_valuation(const std::string& atom, PointSet truth) {
  if (truth.universe() != size()) throw PreconditionError("valuation of '" + atom + "' has the wrong carrier");
  for (auto& [name, set] : valuation_) {
    if (name == atom) {
      set = std::move(truth);
      return;
    }
  }
  valuation_.emplace_back(atom, std::move(truth));
}

const PointSet& BijectiveModel::valuation(const std::string& atom) const {
  for (const auto& [name, set] : valuation_) {
    if (name == atom) return set;
  }
  throw UnknownIdentifier("unknown atom '" + atom + "'");
}

bool BijectiveModel::has_atom(const std::string& atom) const noexcept {
  return std::any_of(valuation_.begin(), valuation_.end(), [&](const auto& v) { return v.first == atom; });
}

std::vector<std::string> BijectiveModel::atom_names() const {
  std::vector<std::string> out;
  for (const auto& v : valuation_) out.push_back(v.first);
  return out;
}

std::vector<std::vector<std::size_t>> BijectiveModel::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(size(), false);
  for (std::size_t start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t x = start; !seen[x]; x = succ_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

namespace {

// {x : next(x) in a}
PointSet pull_back(const PointSet& a, const std::vector<std::size_t>& next) {
  PointSet out(a.universe());
  for (std::size_t x = 0; x < next.size(); ++x) {
    if (a.contains(next[x])) out.insert(x);
  }
  return out;
}

PointSet eventually(const PointSet& a, const std::vector<std::size_t>& next) {
  PointSet z(a.universe());
  while (true) {
    PointSet grown = a | pull_back(z, next);
    if (grown == z) return z;
    z = std::move(grown);
  }
}

PointSet eval(const BijectiveModel& m, const std::vector<std::size_t>& pred, const PltlFormula& f) {
  using K = PltlFormula::Kind;
  switch (f.kind()) {
    case K::True: return PointSet::full(m.size());
    case K::False: return PointSet(m.size());
    case K::Prop: return m.valuation(f.name());
    case K::Not: return eval(m, pred, f.operand()).complement();
    case K::And: return eval(m, pred, f.left()) & eval(m, pred, f.right());
    case K::Or: return eval(m, pred, f.left()) | eval(m, pred, f.right());
    case K::Implies: return eval(m, pred, f.left()).complement() | eval(m, pred, f.right());
    case K::Next: return pull_back(eval(m, pred, f.operand()), m.successor());
    case K::Yesterday: return pull_back(eval(m, pred, f.operand()), pred);
    case K::Future: return eventually(eval(m, pred, f.operand()), m.successor());
    case K::Past: return eventually(eval(m, pred, f.operand()), pred);
  }
  return PointSet(m.size());
}

}  // namespace

PointSet eval_pltl_finite(const BijectiveModel& m, const PltlFormula& f) {
  std::vector<std::size_t> pred(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) pred[x] = m.pred(x);
  return eval(m, pred, f);
}

bool holds_pltl_at(const BijectiveModel& m, std::size_t w, const PltlFormula& f) {
  using K = PltlFormula::Kind;
  switch (f.kind()) {
    case K::True: return true;
    case K::False: return false;
    case K::Prop: return m.valuation(f.name()).contains(w);
    case K::Not: return !holds_pltl_at(m, w, f.operand());
    case K::And: return holds_pltl_at(m, w, f.left()) && holds_pltl_at(m, w, f.right());
    case K::Or: return holds_pltl_at(m, w, f.left()) || holds_pltl_at(m, w, f.right());
    case K::Implies: return !holds_pltl_at(m, w, f.left()) || holds_pltl_at(m, w, f.right());
    case K::Next: return holds_pltl_at(m, m.succ(w), f.operand());
    case K::Yesterday: return holds_pltl_at(m, m.pred(w), f.operand());
    case K::Future:
    case K::Past: {
      // Every orbit has length at most n, so k < n covers all of succ^k(w).
      std::size_t x = w;
      for (std::size_t k = 0; k < m.size(); ++k) {
        if (holds_pltl_at(m, x, f.operand())) return true;
        x = f.kind() == K::Future ? m.succ(x) : m.pred(x);
      }
      return false;
    }
  }
  return false;
}

}  // namespace tpdl::pltl
