#include "tpdl/search/nofmp.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "tpdl/error.hpp"
#include "tpdl/pltl/tail_set.hpp"
#include "tpdl/semantics/eval.hpp"
#include "tpdl/semantics/knowledge.hpp"
#include "tpdl/spaces/model_io.hpp"
#include "tpdl/syntax/parser.hpp"
#include "tpdl/syntax/printer.hpp"
#include "tpdl/syntax/translate.hpp"

namespace tpdl::search {

using syntax::Formula;
using Clock = std::chrono::steady_clock;

namespace {

constexpr const char* kWitness = "F q & ~P q";

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Formula top_part() { return syntax::top_translation(syntax::parse_pltl(kWitness), "a", "b"); }

Formula ck_two() { return semantics::common_knowledge({"a", "b"}, semantics::two_formula("a", "b")); }

// Whole-colourings making every edge of both matchings bichromatic: one bit
// per connected component of their union, fixing the colour of its least point.
std::vector<PointSet> bichromatic_colourings(const Relation& ma, const Relation& mb) {
  const std::size_t n = ma.size();
  std::vector<int> colour(n, -1);
  std::vector<std::size_t> component(n, 0);
  std::size_t components = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    component[s] = components;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (const Relation* r : {&ma, &mb}) {
        for (auto y : r->successors(x).members()) {
          if (colour[y] < 0) {
            colour[y] = 1 - colour[x];
            component[y] = components;
            stack.push_back(y);
          } else if (colour[y] == colour[x]) {
            return {};  // odd cycle: no bichromatic colouring
          }
        }
      }
    }
    ++components;
  }
  std::vector<PointSet> out;
  for (std::uint64_t flip = 0; flip < (std::uint64_t{1} << components); ++flip) {
    PointSet whole(n);
    for (std::size_t x = 0; x < n; ++x) {
      if ((colour[x] == 1) != (((flip >> component[x]) & 1U) != 0)) whole.insert(x);
    }
    out.push_back(std::move(whole));
  }
  return out;
}

NoFmpRow monadic_row(std::size_t n, const Formula& psi, double budget, std::vector<std::string>& counterexamples) {
  const auto start = Clock::now();
  NoFmpRow row{"monadic-pairs", n, Verdict::Unsat, {}, {}};
  const auto matchings = all_relations(n, FrameKind::MonadicDerivative);
  const bool symmetric = n <= kCanonicalLimit;
  const auto group = symmetric ? all_permutations(n) : std::vector<Permutation>{};
  const Formula top = top_part();
  const Formula two = ck_two();

  for (const auto& ma : matchings) {
    std::vector<Permutation> stab;
    if (symmetric) {
      const auto code = relation_code(ma);
      if (!is_minimal(code, n, group)) {
        ++row.stats.frames_pruned;
        continue;
      }
      stab = stabilizer(code, n, group);
    }
    for (const auto& mb : matchings) {
      if (budget > 0 && seconds_since(start) > budget) {
        row.verdict = Verdict::Timeout;
        row.note = "budget exhausted";
        row.stats.ms = seconds_since(start) * 1000;
        return row;
      }
      if (symmetric && !is_minimal(relation_code(mb), n, stab)) {
        ++row.stats.frames_pruned;
        continue;
      }
      ++row.stats.frames;
      Model m = Model::with_points(n);
      m.set_agent("a", FrameKind::MonadicDerivative, ma);
      m.set_agent("b", FrameKind::MonadicDerivative, mb);
      m.set_valuation("whole", PointSet(n));
      m.set_valuation("q", PointSet(n));

      // The top part does not mention whole and C Two does not mention q.
      std::vector<std::pair<std::uint64_t, PointSet>> top_truth;
      for (std::uint64_t q = 0; q < (std::uint64_t{1} << n); ++q) {
        m.set_valuation("q", PointSet::from_mask(n, q));
        ++row.stats.evaluations;
        top_truth.emplace_back(q, semantics::evaluate(m, top));
      }
      for (const auto& whole : bichromatic_colourings(ma, mb)) {
        m.set_valuation("whole", whole);
        ++row.stats.evaluations;
        const PointSet two_truth = semantics::evaluate(m, two);
        for (const auto& [q, truth] : top_truth) {
          ++row.stats.models_checked;
          if (!(truth & two_truth).empty()) {
            m.set_valuation("q", PointSet::from_mask(n, q));
            const PointSet full = semantics::evaluate(m, psi);
            row.verdict = Verdict::Sat;
            counterexamples.push_back("monadic-pairs n=" + std::to_string(n) + ": " + model_to_json(m).dump() +
                                      " at " + m.point_name(full.members().front()));
          }
        }
      }
    }
  }
  row.stats.ms = seconds_since(start) * 1000;
  return row;
}

NoFmpRow engine_row(const std::string& klass, FrameKind kind, std::size_t n, const Formula& psi, double budget,
                    unsigned jobs, std::vector<std::string>& counterexamples) {
  SearchSpec spec;
  spec.formula = psi;
  spec.agents = {{"a", kind}, {"b", kind}};
  spec.atoms = {"q", "whole"};
  spec.min_size = spec.max_size = n;
  spec.budget_seconds = budget;
  spec.jobs = jobs;
  std::optional<Model> witness;
  std::optional<PointId> point;
  SizeReport r = search_size(spec, n, &witness, &point);
  if (witness) {
    counterexamples.push_back(klass + " n=" + std::to_string(n) + ": " + model_to_json(*witness).dump() + " at " +
                              witness->point_name(*point));
  }
  return {klass, n, r.verdict, r.stats, r.note};
}

}  // namespace

Formula nofmp_formula() { return Formula::conj(top_part(), ck_two()); }

bool NoFmpReport::reproduces_theorem() const {
  if (!witness_holds || !counterexamples.empty()) return false;
  return std::all_of(rows.begin(), rows.end(), [](const NoFmpRow& r) { return r.verdict == Verdict::Unsat; });
}

NoFmpReport nofmp_experiment(const NoFmpOptions& options) {
  if (options.max_size < 2 || options.max_size % 2 != 0) throw PreconditionError("nofmp needs an even carrier bound >= 2");
  if (options.max_size > kMaxSearchSize || options.wk4_max_size > kMaxSearchSize) {
    throw PreconditionError("search is limited to carriers of at most " + std::to_string(kMaxSearchSize) + " points");
  }
  const auto start = Clock::now();
  auto remaining = [&]() -> double {
    if (options.budget_seconds <= 0) return 0;
    return std::max(1e-3, options.budget_seconds - seconds_since(start));
  };
  auto exhausted = [&] { return options.budget_seconds > 0 && seconds_since(start) >= options.budget_seconds; };

  NoFmpReport report;
  const Formula psi = nofmp_formula();
  report.formula = syntax::to_string(psi);

  auto push = [&](NoFmpRow row) { report.rows.push_back(std::move(row)); };
  auto skipped = [&](const std::string& klass, std::size_t n) {
    push({klass, n, Verdict::Timeout, {}, "budget exhausted before start"});
  };

  for (std::size_t n = 2; n <= options.max_size; n += 2) {
    if (exhausted()) {
      skipped("monadic-pairs", n);
      continue;
    }
    push(monadic_row(n, psi, remaining(), report.counterexamples));
  }
  for (std::size_t n = 2; n <= std::min(options.unfiltered_max_size, options.max_size); n += 2) {
    if (exhausted()) {
      skipped("monadic-pairs-unfiltered", n);
      continue;
    }
    push(engine_row("monadic-pairs-unfiltered", FrameKind::MonadicDerivative, n, psi, remaining(), options.jobs,
                    report.counterexamples));
  }
  for (std::size_t n = 1; n <= options.wk4_max_size; ++n) {
    if (exhausted()) {
      skipped("wk4", n);
      continue;
    }
    push(engine_row("wk4", FrameKind::WK4, n, psi, remaining(), options.jobs, report.counterexamples));
  }

  pltl::TailModel tail;
  tail.set_valuation("q", pltl::TailSet::of({1}));
  report.witness_formula = kWitness;
  report.witness_truth = pltl::eval_pltl_tail(tail, syntax::parse_pltl(kWitness));
  report.witness_holds = report.witness_truth.contains(0);
  return report;
}

nlohmann::json report_to_json(const NoFmpReport& report) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : report.rows) {
    nlohmann::json row = {{"class", r.klass},
                          {"n", r.n},
                          {"verdict", verdict_name(r.verdict)},
                          {"models_checked", r.stats.models_checked},
                          {"ms", r.stats.ms}};
    if (!r.note.empty()) row["note"] = r.note;
    results.push_back(std::move(row));
  }
  return {{"formula", report.formula},
          {"class", "monadic-pairs+wk4"},
          {"results", std::move(results)},
          {"infinite_witness",
           {{"formula", report.witness_formula},
            {"valuation", {{"q", "{1}"}}},
            {"truth_set", report.witness_truth.to_string()},
            {"point", 0},
            {"verdict", report.witness_holds ? "SAT" : "UNSAT"}}},
          {"counterexamples", report.counterexamples},
          {"reproduces_theorem", report.reproduces_theorem()}};
}

std::string report_table(const NoFmpReport& report) {
  std::ostringstream os;
  os << "psi = " << report.formula << "\n\n";
  char line[200];
  std::snprintf(line, sizeof line, "%-26s %4s  %-8s %10s %16s %12s\n", "class", "n", "verdict", "frames", "models_checked",
                "ms");
  os << line;
  for (const auto& r : report.rows) {
    std::snprintf(line, sizeof line, "%-26s %4zu  %-8s %10llu %16llu %12.1f", r.klass.c_str(), r.n,
                  std::string(verdict_name(r.verdict)).c_str(), static_cast<unsigned long long>(r.stats.frames),
                  static_cast<unsigned long long>(r.stats.models_checked), r.stats.ms);
    os << line;
    if (!r.note.empty()) os << "  (" << r.note << ")";
    os << '\n';
  }
  os << "\ninfinite witness: " << report.witness_formula << " with [[q]] = {1} on Z: truth set "
     << report.witness_truth.to_string() << ", " << (report.witness_holds ? "SAT" : "UNSAT") << " at 0\n";
  for (const auto& c : report.counterexamples) os << "COUNTEREXAMPLE " << c << '\n';
  return os.str();
}

}  // namespace tpdl::search
