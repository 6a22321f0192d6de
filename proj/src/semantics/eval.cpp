#include "tpdl/semantics/eval.hpp"

#include <unordered_map>

#include "tpdl/error.hpp"

namespace tpdl::semantics {

using syntax::Formula;
using syntax::Program;

PointSet eval_program(const Model& m, const Program& program, const PointSet& y) {
  switch (program.kind()) {
    case Program::Kind::Atom: return m.agent(program.agent()).relation.preimage(y);
    case Program::Kind::Seq: return eval_program(m, program.left(), eval_program(m, program.right(), y));
    case Program::Kind::Union: return eval_program(m, program.left(), y) | eval_program(m, program.right(), y);
    case Program::Kind::Star: {
      PointSet z(m.size());
      while (true) {
        PointSet next = y | eval_program(m, program.body(), z);
        if (next == z) return z;
        z = std::move(next);
      }
    }
  }
  return y;
}

namespace {

class Evaluator {
 public:
  Evaluator(const Model& m, bool record) : m_(m), record_(record) {}

  PointSet eval(const Formula& f) {
    if (record_) {
      if (auto it = cache_.find(f.identity()); it != cache_.end()) return it->second;
    }
    PointSet result = compute(f);
    if (record_) {
      cache_.emplace(f.identity(), result);
      order_.emplace_back(f, result);
    }
    return result;
  }

  std::vector<std::pair<Formula, PointSet>> take_order() { return std::move(order_); }

 private:
  PointSet compute(const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::True: return m_.full_set();
      case K::False: return m_.empty_set();
      case K::Prop: return m_.valuation(f.name());
      case K::Not: return eval(f.operand()).complement();
      case K::And: return eval(f.left()) & eval(f.right());
      case K::Or: return eval(f.left()) | eval(f.right());
      case K::Implies: return eval(f.left()).complement() | eval(f.right());
      case K::Diamond: return eval_program(m_, f.program(), eval(f.operand()));
      case K::Box: return eval_program(m_, f.program(), eval(f.operand()).complement()).complement();
    }
    return m_.empty_set();
  }

  const Model& m_;
  bool record_;
  std::unordered_map<const void*, PointSet> cache_;
  std::vector<std::pair<Formula, PointSet>> order_;
};

}  // namespace

PointSet evaluate(const Model& m, const Formula& f) { return Evaluator(m, false).eval(f); }

const PointSet* EvalResult::find(const Formula& sub) const {
  for (const auto& [g, set] : subformulas_) {
    if (g == sub) return &set;
  }
  return nullptr;
}

EvalResult truth_set(const Model& m, const Formula& f) {
  Evaluator ev(m, true);
  PointSet truth = ev.eval(f);
  return EvalResult(f, std::move(truth), ev.take_order());
}

bool holds_at(const Model& m, PointId x, const Formula& f) {
  if (x >= m.size()) throw UnknownIdentifier("point " + std::to_string(x) + " outside the carrier");
  return evaluate(m, f).contains(x);
}

bool holds_at(const Model& m, const std::string& point, const Formula& f) { return holds_at(m, m.point(point), f); }

bool validates(const Model& m, const Formula& f) { return evaluate(m, f).is_full(); }

PointSet star_oracle(const Model& m, const Program& body, const PointSet& y) {
  const std::size_t n = m.size();
  if (n > kStarOracleLimit) {
    throw PreconditionError("star oracle enumerates all subsets; carrier of " + std::to_string(n) +
                            " points exceeds the limit of " + std::to_string(kStarOracleLimit));
  }
  PointSet result = m.full_set();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const PointSet z = PointSet::from_mask(n, mask);
    if ((eval_program(m, body, z) | y).is_subset_of(z)) result &= z;
  }
  return result;
}

}  // namespace tpdl::semantics
