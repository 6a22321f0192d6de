#include "tpdl/cli/verify.hpp"

#include <cstdio>
#include <functional>
#include <sstream>

#include "tpdl/cli/random.hpp"
#include "tpdl/error.hpp"
#include "tpdl/pltl/bijective.hpp"
#include "tpdl/pltl/doubling.hpp"
#include "tpdl/pltl/pltl_io.hpp"
#include "tpdl/pltl/tail_set.hpp"
#include "tpdl/semantics/eval.hpp"
#include "tpdl/semantics/knowledge.hpp"
#include "tpdl/spaces/axioms.hpp"
#include "tpdl/spaces/constructions.hpp"
#include "tpdl/spaces/model_io.hpp"
#include "tpdl/syntax/parser.hpp"
#include "tpdl/syntax/printer.hpp"
#include "tpdl/syntax/translate.hpp"

namespace tpdl::verify {

using gen::Rng;
using semantics::evaluate;
using syntax::Formula;

namespace {

constexpr std::size_t kKeptFailures = 10;

class Checker {
 public:
  explicit Checker(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checks;
    if (ok) return;
    ++result_.failed;
    if (result_.failures.size() < kKeptFailures) result_.failures.push_back(describe());
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string dump(const Model& m) { return model_to_json(m).dump(); }

std::vector<std::pair<std::string, FrameKind>> kBi(FrameKind kind) { return {{"a", kind}, {"b", kind}}; }

gen::FormulaOptions bimodal(std::size_t depth = 3) { return {{"a", "b"}, {"p", "q"}, depth, 2, true}; }

void axioms(Rng& rng, std::size_t iterations, Checker& c) {
  for (std::size_t it = 0; it < iterations; ++it) {
    const std::size_t n = gen::uniform(rng, 1, 8);
    const Model m = gen::random_model(rng, n, {{"a", FrameKind::WK4}}, {});
    const auto v = check_derivative_axioms(m, "a");
    c.check(!v, [&] { return "wk4 frame " + dump(m) + ": " + v->describe(); });

    // On arbitrary small relations the axioms hold exactly for weakly transitive ones.
    const std::size_t k = gen::uniform(rng, 1, 4);
    const Model any = gen::random_model(rng, k, {{"a", FrameKind::Any}}, {}, 0.4);
    const bool wk4 = !validate_frame(any.agent("a").relation, FrameKind::WK4);
    const bool passes = !check_derivative_axioms(any, "a");
    c.check(wk4 == passes, [&] { return "axioms/wk4 disagree on " + dump(any); });
  }
}

void theorem1(Rng& rng, std::size_t iterations, Checker& c) {
  for (std::size_t it = 0; it < iterations; ++it) {
    const Model m = gen::random_model(rng, gen::uniform(rng, 1, 6), kBi(FrameKind::Any), {"p", "q"});
    const Model closed = reflexive_transitive_closure(m);
    const Model s4 = gen::random_model(rng, gen::uniform(rng, 1, 6), kBi(FrameKind::S4), {"p", "q"});
    for (int k = 0; k < 5; ++k) {
      const Formula f = gen::random_formula(rng, bimodal());
      const Formula fs = syntax::star_translation(f);
      c.check(evaluate(m, fs) == evaluate(closed, f),
              [&] { return "star translation vs closure: " + syntax::to_string(f) + " on " + dump(m); });
      c.check(evaluate(s4, f) == evaluate(s4, fs),
              [&] { return "star translation on s4: " + syntax::to_string(f) + " on " + dump(s4); });
    }
  }
}

void theorem2(Rng& rng, std::size_t iterations, Checker& c) {
  for (std::size_t it = 0; it < iterations; ++it) {
    const Model m = gen::random_model(rng, gen::uniform(rng, 1, 6), kBi(FrameKind::Any), {"p", "q"});
    const Model plus = transitive_closure(m);
    for (int k = 0; k < 5; ++k) {
      const Formula f = gen::random_formula(rng, bimodal());
      c.check(evaluate(m, syntax::plus_translation(f)) == evaluate(plus, f),
              [&] { return "plus translation vs transitive closure: " + syntax::to_string(f) + " on " + dump(m); });
    }

    const std::size_t n = gen::uniform(rng, 1, 6);
    const Model w = gen::random_model(rng, n, {{"a", FrameKind::WK4}}, {"p", "q"});
    const Resolution res = irreflexive_resolution(w);
    const auto violation = validate_frame(res.model.agent("a").relation, FrameKind::IrreflexiveWK4);
    c.check(!violation, [&] { return "resolution not irreflexive wk4: " + dump(w); });
    c.check(res.model.size() <= 2 * n, [&] { return "resolution too large: " + dump(w); });
    const auto pm = check_p_morphism(res.witness);
    c.check(!pm, [&] { return "resolution witness: " + *pm + " on " + dump(w); });
    for (int k = 0; k < 5; ++k) {
      const Formula f = gen::random_formula(rng, {{"a"}, {"p", "q"}, 3, 2, true});
      const PointSet below = evaluate(w, f);
      const PointSet above = evaluate(res.model, f);
      bool agree = true;
      for (PointId x = 0; x < res.model.size(); ++x) agree = agree && above.contains(x) == below.contains(res.witness.map[x]);
      c.check(agree, [&] { return "resolution truth: " + syntax::to_string(f) + " on " + dump(w); });
    }

    // Bounded unwinding of a transitive model preserves star-free truth at the root.
    const Model t = gen::random_model(rng, gen::uniform(rng, 1, 3), kBi(FrameKind::K4), {"p", "q"});
    const Formula g = gen::random_formula(rng, {{"a", "b"}, {"p", "q"}, 2, 1, false});
    const PointId root = gen::uniform(rng, 0, t.size() - 1);
    const Unwinding u = bounded_unwinding(t, root, syntax::modal_reach(g) + 1);
    c.check(semantics::holds_at(u.model, 0, g) == semantics::holds_at(t, root, g),
            [&] { return "unwinding truth: " + syntax::to_string(g) + " on " + dump(t); });
  }
}

void lemmas(Rng& rng, std::size_t iterations, Checker& c) {
  const auto witness = syntax::parse_pltl("F q & ~P q");
  pltl::TailModel tail;
  tail.set_valuation("q", pltl::TailSet::of({1}));
  c.check(pltl::eval_pltl_tail(tail, witness).contains(0), [] { return "F q & ~P q fails at 0 on Z with q = {1}"; });
  const Formula two_everywhere = semantics::common_knowledge({"a", "b"}, semantics::two_formula("a", "b"));

  for (std::size_t it = 0; it < iterations; ++it) {
    const std::size_t n = gen::uniform(rng, 1, 6);
    pltl::BijectiveModel m(gen::random_permutation(rng, n));
    for (const std::string atom : {"p", "q"}) {
      PointSet truth(n);
      for (std::size_t x = 0; x < n; ++x) {
        if (gen::uniform(rng, 0, 1)) truth.insert(x);
      }
      m.set_valuation(atom, truth);
    }
    const std::string where = pltl::bijective_to_json(m).dump();
    c.check(pltl::eval_pltl_finite(m, witness).empty(), [&] { return "F q & ~P q satisfiable on " + where; });

    const pltl::Doubling d = pltl::doubling(m);
    c.check(semantics::validates_two(d.model, "a", "b"), [&] { return "Two fails on the doubling of " + where; });
    const auto sa = semantics::extract_successor(d.model, "a");
    const auto sb = semantics::extract_successor(d.model, "b");
    c.check(sa.ok() && sb.ok(), [&] { return "successor extraction fails on the doubling of " + where; });
    if (sa.ok() && sb.ok()) {
      const auto& fa = *sa.map;
      const auto& fb = *sb.map;
      bool involutive = true;
      for (PointId x = 0; x < fa.size(); ++x) involutive = involutive && fa[fa[x]] == x && fb[fb[x]] == x;
      c.check(involutive, [&] { return "partner maps are not involutions on the doubling of " + where; });
      const auto step = semantics::compose(fa, fb);
      bool tracks = true;
      for (std::size_t i = 0; i < n; ++i) tracks = tracks && step[d.embedding[i]] == d.embedding[m.succ(i)];
      c.check(tracks, [&] { return "S_b S_a does not follow the successor on " + where; });
    }

    const auto report = semantics::common_knowledge_open_check(d.model, {"a", "b"}, semantics::two_formula("a", "b"));
    c.check(report.jointly_open() && report.truth.is_full(),
            [&] { return "C{a,b} Two is not the whole open carrier on the doubling of " + where; });
    c.check(semantics::validates(d.model, two_everywhere), [&] { return "C{a,b} Two not valid on " + where; });

    for (int k = 0; k < 5; ++k) {
      const auto f = gen::random_pltl(rng, {"p", "q"}, 4);
      const PointSet temporal = pltl::eval_pltl_finite(m, f);
      const PointSet modal = evaluate(d.model, syntax::top_translation(f, "a", "b"));
      bool agree = true;
      for (std::size_t i = 0; i < n; ++i) agree = agree && modal.contains(d.embedding[i]) == temporal.contains(i);
      c.check(agree, [&] { return "top translation of " + syntax::to_string(f) + " disagrees on " + where; });
    }
  }
}

void restriction(Rng& rng, std::size_t iterations, Checker& c) {
  const std::vector<FrameKind> kinds{FrameKind::Any, FrameKind::WK4, FrameKind::K4, FrameKind::S4, FrameKind::Equivalence,
                                     FrameKind::MonadicDerivative};
  for (std::size_t it = 0; it < iterations; ++it) {
    const FrameKind ka = kinds[gen::uniform(rng, 0, kinds.size() - 1)];
    const FrameKind kb = kinds[gen::uniform(rng, 0, kinds.size() - 1)];
    const Model m = gen::random_model(rng, gen::uniform(rng, 1, 6), {{"a", ka}, {"b", kb}}, {"p", "q"});
    const Formula f = gen::random_formula(rng, bimodal(2));
    const PointSet u = evaluate(m, semantics::common_knowledge({"a", "b"}, f));
    const bool open = is_open(m, "a", u) && is_open(m, "b", u);
    c.check(open, [&] { return "[(a u b)*]" + syntax::to_string(f) + " not open on " + dump(m); });
    if (!open) continue;
    const Model sub = restrict_to_open(m, u, {"a", "b"});
    for (int k = 0; k < 5; ++k) {
      const Formula g = gen::random_formula(rng, bimodal());
      const PointSet whole = evaluate(m, g);
      const PointSet part = evaluate(sub, g);
      bool agree = true;
      for (PointId x = 0; x < sub.size(); ++x) agree = agree && part.contains(x) == whole.contains(m.point(sub.point_name(x)));
      c.check(agree, [&] { return "restriction changes " + syntax::to_string(g) + " on " + dump(m); });
    }
  }
}

using Suite = void (*)(Rng&, std::size_t, Checker&);

Suite suite_for(const std::string& name) {
  if (name == "axioms") return axioms;
  if (name == "theorem1") return theorem1;
  if (name == "theorem2") return theorem2;
  if (name == "lemmas") return lemmas;
  if (name == "restriction") return restriction;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"axioms", "theorem1", "theorem2", "lemmas", "restriction"};
  return names;
}

std::vector<SuiteResult> run_suite(const std::string& name, std::uint64_t seed, std::size_t iterations) {
  if (name == "all") {
    std::vector<SuiteResult> out;
    for (const auto& s : suite_names()) out.push_back(run_suite(s, seed, iterations).front());
    return out;
  }
  const Suite suite = suite_for(name);
  if (!suite) throw PreconditionError("unknown suite '" + name + "'");
  std::seed_seq seq(name.begin(), name.end());
  std::vector<std::uint32_t> mix(2);
  seq.generate(mix.begin(), mix.end());
  Rng rng(seed ^ (std::uint64_t{mix[0]} << 32 | mix[1]));
  Checker c(name);
  suite(rng, iterations, c);
  return {c.take()};
}

nlohmann::json results_to_json(const std::vector<SuiteResult>& results) {
  nlohmann::json suites = nlohmann::json::array();
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.ok();
    suites.push_back({{"suite", r.name}, {"checks", r.checks}, {"failed", r.failed}, {"failures", r.failures}});
  }
  return {{"ok", ok}, {"suites", std::move(suites)}};
}

std::string results_table(const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  char line[120];
  for (const auto& r : results) {
    std::snprintf(line, sizeof line, "%-12s %8zu checks %6zu failed  %s\n", r.name.c_str(), r.checks, r.failed,
                  r.ok() ? "ok" : "FAIL");
    os << line;
    for (const auto& f : r.failures) os << "  " << f << '\n';
  }
  return os.str();
}

}  // namespace tpdl::verify
