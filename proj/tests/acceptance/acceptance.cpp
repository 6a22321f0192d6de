// Acceptance suite. Each criterion runs under its own wall-clock limit and
// prints one PASS/FAIL line; pass criterion numbers as arguments to run a
// subset. Exit status is 0 iff every selected criterion passed.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "tpdl/cli/random.hpp"
#include "tpdl/pltl/bijective.hpp"
#include "tpdl/pltl/doubling.hpp"
#include "tpdl/pltl/tail_set.hpp"
#include "tpdl/search/enumerate.hpp"
#include "tpdl/search/nofmp.hpp"
#include "tpdl/search/search.hpp"
#include "tpdl/semantics/eval.hpp"
#include "tpdl/semantics/knowledge.hpp"
#include "tpdl/spaces/axioms.hpp"
#include "tpdl/spaces/constructions.hpp"
#include "tpdl/spaces/model_io.hpp"
#include "tpdl/syntax/parser.hpp"
#include "tpdl/syntax/printer.hpp"
#include "tpdl/syntax/translate.hpp"

using namespace tpdl;
using Clock = std::chrono::steady_clock;
using syntax::Formula;
using syntax::PltlFormula;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::string failure;

  void fail(const std::string& why) {
    if (ok) failure = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome(Clock::time_point deadline)> run;
};

std::string dump(const Model& m) { return model_to_json(m).dump(); }

const std::vector<std::pair<std::string, FrameKind>> kBiK{{"a", FrameKind::Any}, {"b", FrameKind::Any}};
const std::vector<std::pair<std::string, FrameKind>> kBiS4{{"a", FrameKind::S4}, {"b", FrameKind::S4}};

gen::FormulaOptions bimodal() { return {{"a", "b"}, {"p", "q"}, 4, 2, true}; }

// ---------------------------------------------------------------------------

Outcome star_oracle_sweep(Clock::time_point deadline) {
  const std::vector<syntax::Program> bodies{syntax::parse_program("a"), syntax::parse_program("a u b"),
                                            syntax::parse_program("a;b")};
  std::vector<syntax::Program> stars;
  for (const auto& b : bodies) stars.push_back(syntax::Program::star(b));

  Outcome out;
  std::size_t complete_up_to = 0;
  std::uint64_t comparisons = 0;
  bool timed_out = false;
  for (std::size_t n = 1; n <= 6 && out.ok && !timed_out; ++n) {
    const std::uint64_t per_agent = std::uint64_t{1} << (n * n);
    std::uint64_t pairs_done = 0;
    Model m = Model::with_points(n);
    search::for_each_relation(n, FrameKind::Any, [&](const Relation& ra) {
      m.set_agent("a", FrameKind::Any, ra);
      return search::for_each_relation(n, FrameKind::Any, [&](const Relation& rb) {
        if ((pairs_done & 0x3FF) == 0 && Clock::now() > deadline) {
          timed_out = true;
          return false;
        }
        m.set_agent("b", FrameKind::Any, rb);
        for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
          const PointSet ys = PointSet::from_mask(n, y);
          for (std::size_t k = 0; k < bodies.size(); ++k) {
            ++comparisons;
            if (semantics::eval_program(m, stars[k], ys) != semantics::star_oracle(m, bodies[k], ys)) {
              out.fail("mismatch for " + syntax::to_string(stars[k]) + " on " + dump(m));
              return false;
            }
          }
        }
        ++pairs_done;
        return true;
      });
    });
    if (!timed_out && out.ok) {
      complete_up_to = n;
      continue;
    }
    if (timed_out) {
      out.fail("limit reached during n = " + std::to_string(n) + " after " + std::to_string(pairs_done) + " of " +
               std::to_string(per_agent) + "^2 relation pairs");
    }
  }
  out.detail = "exhaustive through n = " + std::to_string(complete_up_to) + " of 6, " + std::to_string(comparisons) +
               " comparisons";
  return out;
}

Outcome derivative_axioms(Clock::time_point) {
  gen::Rng rng(2);
  Outcome out;
  std::size_t frames = 0;
  for (int i = 0; i < 1000; ++i) {
    const Model m = gen::random_model(rng, gen::uniform(rng, 1, 8), {{"a", FrameKind::WK4}}, {});
    ++frames;
    if (validate_frame(m.agent("a").relation, FrameKind::WK4)) out.fail("generator produced a non-wk4 frame");
    if (auto v = check_derivative_axioms(m, "a")) out.fail(v->describe() + " on " + dump(m));
  }
  out.detail = std::to_string(frames) + " frames";
  return out;
}

Outcome star_translation(Clock::time_point) {
  gen::Rng rng(3);
  Outcome out;
  std::size_t checks = 0;
  for (int i = 0; i < 500; ++i) {
    const Model m = gen::random_model(rng, gen::uniform(rng, 1, 7), kBiK, {"p", "q"});
    const Model closed = reflexive_transitive_closure(m);
    for (int k = 0; k < 50; ++k) {
      const Formula f = gen::random_formula(rng, bimodal());
      const Formula fs = syntax::star_translation(f);
      for (PointId w = 0; w < m.size(); ++w) {
        ++checks;
        if (semantics::holds_at(m, w, fs) != semantics::holds_at(closed, w, f)) {
          out.fail("pointwise disagreement for " + syntax::to_string(f) + " on " + dump(m));
        }
      }
    }
  }
  for (int i = 0; i < 200; ++i) {
    const Model m = gen::random_model(rng, gen::uniform(rng, 1, 7), kBiS4, {"p", "q"});
    for (int k = 0; k < 50; ++k) {
      const Formula f = gen::random_formula(rng, bimodal());
      ++checks;
      if (semantics::evaluate(m, f) != semantics::evaluate(m, syntax::star_translation(f))) {
        out.fail("truth sets differ on a preorder model for " + syntax::to_string(f) + " on " + dump(m));
      }
    }
  }
  out.detail = std::to_string(checks) + " checks";
  return out;
}

Outcome plus_and_resolution(Clock::time_point) {
  gen::Rng rng(4);
  Outcome out;
  std::size_t checks = 0;
  for (int i = 0; i < 500; ++i) {
    const Model m = gen::random_model(rng, gen::uniform(rng, 1, 7), kBiK, {"p", "q"});
    const Model closed = transitive_closure(m);
    for (int k = 0; k < 50; ++k) {
      const Formula f = gen::random_formula(rng, bimodal());
      const Formula fp = syntax::plus_translation(f);
      for (PointId w = 0; w < m.size(); ++w) {
        ++checks;
        if (semantics::holds_at(m, w, fp) != semantics::holds_at(closed, w, f)) {
          out.fail("plus translation disagrees for " + syntax::to_string(f) + " on " + dump(m));
        }
      }
    }
  }
  const gen::FormulaOptions mono{{"a"}, {"p", "q"}, 4, 2, true};
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = gen::uniform(rng, 1, 8);
    const Model m = gen::random_model(rng, n, {{"a", FrameKind::WK4}}, {"p", "q"});
    const Resolution r = irreflexive_resolution(m);
    ++checks;
    if (r.model.size() > 2 * n) out.fail("resolution has more than twice the points of " + dump(m));
    if (auto v = validate_frame(r.model.agent("a").relation, FrameKind::IrreflexiveWK4)) {
      out.fail("resolution is not irreflexive wk4: " + v->describe());
    }
    PMorphismCheck strict;
    strict.require_surjective = true;
    if (auto e = check_p_morphism(r.witness, strict)) out.fail("projection is not a p-morphism: " + *e);
    for (int k = 0; k < 20; ++k) {
      const Formula f = gen::random_formula(rng, mono);
      const PointSet below = semantics::evaluate(m, f);
      const PointSet above = semantics::evaluate(r.model, f);
      for (PointId x = 0; x < r.model.size(); ++x) {
        ++checks;
        if (above.contains(x) != below.contains(r.witness.map[x])) {
          out.fail("truth not preserved by the projection for " + syntax::to_string(f) + " on " + dump(m));
        }
      }
    }
  }
  out.detail = std::to_string(checks) + " checks";
  return out;
}

Outcome finite_unsatisfiability(Clock::time_point deadline) {
  Outcome out;
  const PltlFormula phi = syntax::parse_pltl("F q & ~P q");
  pltl::TailModel z;
  z.set_valuation("q", pltl::TailSet::of({1}));
  const pltl::TailSet truth = pltl::eval_pltl_tail(z, phi);
  if (!truth.contains(0)) out.fail("integer witness fails at 0: truth set " + truth.to_string());

  const double budget = std::chrono::duration<double>(deadline - Clock::now()).count();
  const auto search = search::pltl_finite_search(phi, 6, std::max(budget, 0.001));
  if (search.verdict != search::Verdict::Unsat || search.bound != 6) {
    out.fail(std::string("finite search verdict ") + std::string(search::verdict_name(search.verdict)) + " at n = " +
             std::to_string(search.bound));
  }
  out.detail = "integer truth set " + truth.to_string() + "; finite search " +
               std::string(search::verdict_name(search.verdict)) + " up to n = " + std::to_string(search.bound) + " (" +
               std::to_string(search.stats.models_checked) + " models)";
  return out;
}

Outcome successor_extraction(Clock::time_point) {
  Outcome out;
  std::size_t models = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::size_t> succ(n);
    std::iota(succ.begin(), succ.end(), 0);
    do {
      ++models;
      const auto d = pltl::doubling(pltl::BijectiveModel(succ));
      const auto sa = semantics::extract_successor(d.model, "a");
      const auto sb = semantics::extract_successor(d.model, "b");
      const std::string where = "permutation " + nlohmann::json(succ).dump();
      if (!sa.ok() || !sb.ok()) {
        out.fail("extraction failed on " + where + ": " + (sa.ok() ? sb.reason : sa.reason));
        continue;
      }
      for (const auto* s : {&*sa.map, &*sb.map}) {
        if (!semantics::is_bijection(*s)) out.fail("partner map is not a bijection on " + where);
        for (PointId x = 0; x < s->size(); ++x) {
          if ((*s)[(*s)[x]] != x) out.fail("partner map is not an involution on " + where);
        }
      }
      const auto s = semantics::compose(*sa.map, *sb.map);
      for (std::size_t i = 0; i < n; ++i) {
        if (s[d.embedding[i]] != d.embedding[succ[i]]) out.fail("composite does not track the successor on " + where);
      }
    } while (std::next_permutation(succ.begin(), succ.end()));
  }
  out.detail = std::to_string(models) + " permutations";
  return out;
}

// Every temporal formula over `atom` with exactly `size` nodes.
std::vector<std::vector<PltlFormula>> formulas_by_size(std::size_t max_size, const std::string& atom) {
  std::vector<std::vector<PltlFormula>> by(max_size + 1);
  by[1] = {PltlFormula::prop(atom), PltlFormula::top(), PltlFormula::bottom()};
  for (std::size_t s = 2; s <= max_size; ++s) {
    for (const auto& f : by[s - 1]) {
      by[s].push_back(PltlFormula::negation(f));
      by[s].push_back(PltlFormula::next(f));
      by[s].push_back(PltlFormula::yesterday(f));
      by[s].push_back(PltlFormula::future(f));
      by[s].push_back(PltlFormula::past(f));
    }
    for (std::size_t l = 1; l + 1 < s; ++l) {
      for (const auto& x : by[l]) {
        for (const auto& y : by[s - 1 - l]) {
          by[s].push_back(PltlFormula::conj(x, y));
          by[s].push_back(PltlFormula::disj(x, y));
          by[s].push_back(PltlFormula::implies(x, y));
        }
      }
    }
  }
  return by;
}

Outcome truth_transfer(Clock::time_point) {
  Outcome out;
  std::vector<PltlFormula> all;
  for (const auto& level : formulas_by_size(5, "q")) all.insert(all.end(), level.begin(), level.end());
  for (const auto& f : all) {
    if (syntax::size_of(f) > 5) out.fail("enumerated a formula of size " + std::to_string(syntax::size_of(f)));
  }
  std::vector<Formula> tops;
  for (const auto& f : all) tops.push_back(syntax::top_translation(f, "a", "b"));

  std::size_t models = 0;
  std::uint64_t checks = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::size_t> succ(n);
    std::iota(succ.begin(), succ.end(), 0);
    do {
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        ++models;
        pltl::BijectiveModel m(succ);
        m.set_valuation("q", PointSet::from_mask(n, v));
        const auto d = pltl::doubling(m);
        for (std::size_t k = 0; k < all.size(); ++k) {
          const PointSet temporal = pltl::eval_pltl_finite(m, all[k]);
          const PointSet spatial = semantics::evaluate(d.model, tops[k]);
          for (std::size_t i = 0; i < n; ++i) {
            ++checks;
            if (spatial.contains(d.embedding[i]) != temporal.contains(i)) {
              out.fail("transfer fails for " + syntax::to_string(all[k]) + " at " + std::to_string(i) +
                       " of permutation " + nlohmann::json(succ).dump());
            }
          }
        }
      }
    } while (std::next_permutation(succ.begin(), succ.end()));
  }
  out.detail = std::to_string(all.size()) + " formulas x " + std::to_string(models) + " models, " +
               std::to_string(checks) + " checks";
  return out;
}

Outcome no_finite_model(Clock::time_point deadline) {
  search::NoFmpOptions o;
  o.max_size = 6;
  o.wk4_max_size = 4;
  o.unfiltered_max_size = 4;
  o.budget_seconds = std::max(std::chrono::duration<double>(deadline - Clock::now()).count(), 0.001);
  o.jobs = std::max(1U, std::thread::hardware_concurrency());
  const auto report = search::nofmp_experiment(o);

  Outcome out;
  std::vector<std::string> want{"monadic-pairs 2", "monadic-pairs 4", "monadic-pairs 6", "wk4 1", "wk4 2", "wk4 3",
                                "wk4 4"};
  std::string rows;
  for (const auto& row : report.rows) {
    const std::string key = row.klass + " " + std::to_string(row.n);
    want.erase(std::remove(want.begin(), want.end(), key), want.end());
    if (row.verdict != search::Verdict::Unsat) {
      out.fail(key + " is " + std::string(search::verdict_name(row.verdict)));
    }
    rows += (rows.empty() ? "" : ", ") + key + " " + std::string(search::verdict_name(row.verdict));
  }
  for (const auto& missing : want) out.fail("no row for " + missing);
  for (const auto& c : report.counterexamples) out.fail("finite model found: " + c);
  if (!report.witness_holds) out.fail("infinite witness does not hold at 0");
  if (!report.reproduces_theorem()) out.fail("report does not reproduce the theorem");
  out.detail = rows + "; integer witness " + report.witness_truth.to_string();
  return out;
}

Outcome openness_and_restriction(Clock::time_point) {
  gen::Rng rng(9);
  Outcome out;
  std::size_t checks = 0;
  const auto& kinds = all_kinds();
  for (int i = 0; i < 300; ++i) {
    const auto ka = kinds[gen::uniform(rng, 0, kinds.size() - 1)];
    const auto kb = kinds[gen::uniform(rng, 0, kinds.size() - 1)];
    const Model m = gen::random_model(rng, gen::uniform(rng, 1, 8), {{"a", ka}, {"b", kb}}, {"p", "q"});
    const Formula f = gen::random_formula(rng, bimodal());
    const PointSet u = semantics::evaluate(m, semantics::common_knowledge({"a", "b"}, f));
    for (const char* agent : {"a", "b"}) {
      ++checks;
      if (!is_open(m, agent, u)) out.fail("fixpoint not open for " + std::string(agent) + " on " + dump(m));
    }
    const Model sub = restrict_to_open(m, u, {"a", "b"});
    for (int k = 0; k < 20; ++k) {
      const Formula g = gen::random_formula(rng, bimodal());
      const PointSet whole = semantics::evaluate(m, g);
      const PointSet part = semantics::evaluate(sub, g);
      u.for_each([&](PointId x) {
        ++checks;
        if (whole.contains(x) != part.contains(sub.point(m.point_name(x)))) {
          out.fail("restriction changes truth of " + syntax::to_string(g) + " on " + dump(m));
        }
      });
    }
  }
  out.detail = std::to_string(checks) + " checks";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "star fixpoint equals the literal intersection on all bimodels up to 6 points", 60, star_oracle_sweep},
      {2, "derivative axioms on 1000 random weakly transitive frames", 10, derivative_axioms},
      {3, "star translation vs reflexive-transitive closure, and on preorder bimodels", 60, star_translation},
      {4, "plus translation vs transitive closure; irreflexive resolution", 60, plus_and_resolution},
      {5, "F q & ~P q: integer witness at 0, no finite bijective model up to 6", 120, finite_unsatisfiability},
      {6, "partner maps of doubled permutations up to 4 points", 30, successor_extraction},
      {7, "truth transfer for all temporal formulas of size <= 5 on permutations up to 3 points", 120,
       truth_transfer},
      {8, "no finite model: monadic pairs n = 2, 4, 6 and all wk4 bimodels n <= 4", 600, no_finite_model},
      {9, "common-knowledge fixpoints are open and restriction preserves truth", 60, openness_and_restriction},
  };

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto start = Clock::now();
    const auto deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(c.limit_seconds));
    Outcome out;
    try {
      out = c.run(deadline);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > c.limit_seconds) out.fail("took " + std::to_string(secs) + " s");
    std::printf("criterion %d: %s  %s [%.1f s / %.0f s] %s%s%s\n", c.id, out.ok ? "PASS" : "FAIL", c.title, secs,
                c.limit_seconds, out.detail.c_str(), out.ok ? "" : " -- ", out.failure.c_str());
    std::fflush(stdout);
    failed += !out.ok;
  }
  return failed == 0 ? 0 : 1;
}
