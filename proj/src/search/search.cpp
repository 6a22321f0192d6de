#include "tpdl/search/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tpdl/error.hpp"
#include "tpdl/semantics/eval.hpp"
#include "tpdl/spaces/model_io.hpp"
#include "tpdl/syntax/printer.hpp"

namespace tpdl::search {

using syntax::Formula;
using Clock = std::chrono::steady_clock;

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Sat: return "SAT";
    case Verdict::Unsat: return "UNSAT";
    case Verdict::Timeout: return "TIMEOUT";
  }
  return "?";
}

SearchStats& SearchStats::operator+=(const SearchStats& other) {
  frames += other.frames;
  frames_pruned += other.frames_pruned;
  models_checked += other.models_checked;
  evaluations += other.evaluations;
  ms += other.ms;
  return *this;
}

namespace {

class Deadline {
 public:
  explicit Deadline(double seconds) {
    if (seconds > 0) {
      at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
    }
  }
  bool passed() const { return at_ && Clock::now() >= *at_; }

 private:
  std::optional<Clock::time_point> at_;
};

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::uint64_t saturating_pow2(std::size_t bits) {
  return bits >= 63 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << bits;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

void flatten(const Formula& f, std::vector<Formula>& out) {
  if (f.kind() == Formula::Kind::And) {
    flatten(f.left(), out);
    flatten(f.right(), out);
  } else {
    out.push_back(f);
  }
}

// Conjuncts sharing atoms, valuated together.
struct Group {
  std::vector<std::string> atoms;
  std::vector<Formula> conjuncts;
};

struct Plan {
  std::vector<Formula> ground;  // atom-free conjuncts
  std::vector<Group> groups;
  std::vector<std::string> idle_atoms;  // in the atom list but not in the formula
  std::size_t atom_count = 0;
};

Plan make_plan(const Formula& f, const std::vector<std::string>& atoms) {
  Plan plan;
  std::vector<Formula> conjuncts;
  flatten(f, conjuncts);
  std::vector<std::pair<std::set<std::string>, std::vector<Formula>>> groups;
  for (const auto& c : conjuncts) {
    const auto used = syntax::atoms_of(c);
    if (used.empty()) {
      plan.ground.push_back(c);
      continue;
    }
    std::pair<std::set<std::string>, std::vector<Formula>> merged{used, {c}};
    std::vector<std::pair<std::set<std::string>, std::vector<Formula>>> rest;
    for (auto& g : groups) {
      const bool shares = std::any_of(used.begin(), used.end(), [&](const auto& a) { return g.first.count(a) > 0; });
      if (shares) {
        merged.first.insert(g.first.begin(), g.first.end());
        merged.second.insert(merged.second.end(), g.second.begin(), g.second.end());
      } else {
        rest.push_back(std::move(g));
      }
    }
    rest.push_back(std::move(merged));
    groups = std::move(rest);
  }
  // Keep groups in order of their first atom so runs are deterministic.
  std::sort(groups.begin(), groups.end(), [](const auto& x, const auto& y) { return *x.first.begin() < *y.first.begin(); });
  std::set<std::string> used_atoms;
  for (auto& [names, fs] : groups) {
    used_atoms.insert(names.begin(), names.end());
    plan.groups.push_back({{names.begin(), names.end()}, std::move(fs)});
  }
  for (const auto& a : atoms) {
    if (!used_atoms.count(a)) plan.idle_atoms.push_back(a);
  }
  plan.atom_count = atoms.size();
  return plan;
}

void set_group_valuation(Model& m, const Group& g, std::uint64_t mask, std::size_t n) {
  const std::uint64_t row = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::size_t t = 0; t < g.atoms.size(); ++t) {
    m.set_valuation(g.atoms[t], PointSet::from_mask(n, (mask >> (t * n)) & row));
  }
}

struct Found {
  std::vector<std::uint64_t> masks;  // one per group
  PointId point = 0;
};

// Decides every valuation of the atom list on the frame held by m.
std::optional<Found> check_frame(Model& m, const Plan& plan, std::size_t n, SearchStats& stats) {
  stats.models_checked = saturating_add(stats.models_checked, saturating_pow2(n * plan.atom_count));
  PointSet base = m.full_set();
  for (const auto& g : plan.ground) {
    base &= semantics::evaluate(m, g);
    ++stats.evaluations;
    if (base.empty()) return std::nullopt;
  }

  std::vector<std::vector<std::pair<std::uint64_t, PointSet>>> survivors(plan.groups.size());
  for (std::size_t gi = 0; gi < plan.groups.size(); ++gi) {
    const Group& g = plan.groups[gi];
    const std::uint64_t total = std::uint64_t{1} << (n * g.atoms.size());
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      set_group_valuation(m, g, mask, n);
      PointSet truth = base;
      for (const auto& c : g.conjuncts) {
        truth &= semantics::evaluate(m, c);
        ++stats.evaluations;
        if (truth.empty()) break;
      }
      if (!truth.empty()) survivors[gi].emplace_back(mask, std::move(truth));
    }
    if (survivors[gi].empty()) return std::nullopt;
  }

  // Pick one survivor per group with a common point.
  Found found;
  found.masks.resize(plan.groups.size());
  std::function<bool(std::size_t, const PointSet&)> pick = [&](std::size_t gi, const PointSet& acc) -> bool {
    if (gi == plan.groups.size()) {
      found.point = acc.members().front();
      return true;
    }
    for (const auto& [mask, truth] : survivors[gi]) {
      PointSet next = acc & truth;
      if (next.empty()) continue;
      found.masks[gi] = mask;
      if (pick(gi + 1, next)) return true;
    }
    return false;
  };
  if (pick(0, base)) return found;
  return std::nullopt;
}

void validate_spec(const SearchSpec& spec, const std::vector<std::string>& atoms) {
  if (spec.min_size < 1 || spec.max_size < spec.min_size) throw PreconditionError("carrier sizes must satisfy 1 <= min <= max");
  if (spec.max_size > kMaxSearchSize) {
    throw PreconditionError("search is limited to carriers of at most " + std::to_string(kMaxSearchSize) + " points");
  }
  std::set<std::string> agent_names;
  for (const auto& [name, kind] : spec.agents) {
    if (!agent_names.insert(name).second) throw PreconditionError("agent '" + name + "' is listed twice");
  }
  for (const auto& a : syntax::agents_of(spec.formula)) {
    if (!agent_names.count(a)) throw PreconditionError("agent '" + a + "' of the formula has no frame kind");
  }
  const std::set<std::string> listed(atoms.begin(), atoms.end());
  if (listed.size() != atoms.size()) throw PreconditionError("atom list has duplicates");
  for (const auto& a : syntax::atoms_of(spec.formula)) {
    if (!listed.count(a)) throw PreconditionError("atom list does not cover '" + a + "'");
  }
  for (const auto& a : atoms) {
    if (agent_names.count(a)) throw PreconditionError("'" + a + "' is both an agent and an atom");
  }
}

std::vector<std::string> atom_list(const SearchSpec& spec) {
  if (!spec.atoms.empty()) return spec.atoms;
  const auto used = syntax::atoms_of(spec.formula);
  return {used.begin(), used.end()};
}

// Shared state of one carrier size.
struct SizeRun {
  SizeRun(const SearchSpec& s, std::size_t size, Plan p, double budget)
      : spec(s), n(size), plan(std::move(p)), deadline(budget) {}

  const SearchSpec& spec;
  std::size_t n;
  Plan plan;
  std::vector<const std::vector<Relation>*> lists;     // per agent
  std::vector<const std::vector<std::uint64_t>*> codes;  // per agent, when symmetric
  bool symmetric = false;
  std::vector<Permutation> group;
  Deadline deadline;

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::atomic<bool> timed_out{false};
  std::mutex mutex;
  std::optional<Model> witness;
  PointId witness_point = 0;
  SearchStats stats;
};

bool visit(SizeRun& run, Model& m, std::size_t level, const std::vector<Permutation>& perms, SearchStats& stats,
           std::optional<Found>& found) {
  if (level == run.spec.agents.size()) {
    if (run.deadline.passed()) {
      run.timed_out = true;
      return false;
    }
    ++stats.frames;
    found = check_frame(m, run.plan, run.n, stats);
    return !found;
  }
  const auto& [name, kind] = run.spec.agents[level];
  const auto& list = *run.lists[level];
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::vector<Permutation> stab;
    if (run.symmetric) {
      const std::uint64_t code = (*run.codes[level])[i];
      if (!is_minimal(code, run.n, perms)) {
        ++stats.frames_pruned;
        continue;
      }
      stab = stabilizer(code, run.n, perms);
    }
    m.set_agent(name, kind, list[i]);
    if (!visit(run, m, level + 1, stab, stats, found)) return false;
  }
  return true;
}

void finish_witness(SizeRun& run, Model m, const Found& f) {
  for (std::size_t gi = 0; gi < run.plan.groups.size(); ++gi) set_group_valuation(m, run.plan.groups[gi], f.masks[gi], run.n);
  for (const auto& a : run.plan.idle_atoms) m.set_valuation(a, PointSet(run.n));
  run.witness = std::move(m);
  run.witness_point = f.point;
}

void worker(SizeRun& run) {
  SearchStats local;
  const auto& agents = run.spec.agents;
  Model m = Model::with_points(run.n);
  if (agents.empty()) {
    if (run.next.fetch_add(1) == 0) {
      std::optional<Found> found;
      visit(run, m, 0, run.group, local, found);
      if (found) {
        std::lock_guard lock(run.mutex);
        run.best = 0;
        finish_witness(run, m, *found);
      }
    }
  } else {
    const auto& outer = *run.lists[0];
    while (!run.timed_out) {
      const std::size_t i = run.next.fetch_add(1);
      if (i >= outer.size() || i > run.best) break;
      std::vector<Permutation> stab;
      if (run.symmetric) {
        const std::uint64_t code = (*run.codes[0])[i];
        if (!is_minimal(code, run.n, run.group)) {
          ++local.frames_pruned;
          continue;
        }
        stab = stabilizer(code, run.n, run.group);
      }
      m.set_agent(agents[0].first, agents[0].second, outer[i]);
      std::optional<Found> found;
      visit(run, m, 1, stab, local, found);
      if (found) {
        std::lock_guard lock(run.mutex);
        if (i < run.best) {
          run.best = i;
          finish_witness(run, m, *found);
        }
        break;
      }
    }
  }
  std::lock_guard lock(run.mutex);
  run.stats += local;
}

void reverify(const Model& m, PointId point, const Formula& f) {
  const Model reloaded = model_from_json(model_to_json(m));
  if (!semantics::holds_at(reloaded, point, f)) {
    throw std::logic_error("search witness fails re-verification at point " + m.point_name(point));
  }
}

}  // namespace

SizeReport search_size(const SearchSpec& spec, std::size_t n, std::optional<Model>* witness, std::optional<PointId>* point) {
  const auto atoms = atom_list(spec);
  validate_spec(spec, atoms);
  if (n < 1 || n > kMaxSearchSize) throw PreconditionError("carrier size out of range");
  const auto start = Clock::now();

  SizeRun run(spec, n, make_plan(spec.formula, atoms), spec.budget_seconds);
  SizeReport report;
  report.n = n;
  for (const auto& g : run.plan.groups) {
    if (n * g.atoms.size() > 24) throw PreconditionError("too many valuations for a conjunct group");
  }

  // Frame lists, one per distinct kind.
  std::map<FrameKind, std::vector<Relation>> lists;
  std::map<FrameKind, std::vector<std::uint64_t>> codes;
  run.symmetric = spec.symmetry_reduction && n <= kCanonicalLimit;
  for (const auto& [name, kind] : spec.agents) {
    if (lists.count(kind)) continue;
    auto& list = lists[kind];
    bool capped = false;
    for_each_relation(
        n, kind,
        [&](const Relation& r) {
          if (list.size() >= kMaxFrameList || ((list.size() & 0xfff) == 0 && run.deadline.passed())) {
            capped = true;
            return false;
          }
          list.push_back(r);
          return true;
        },
        spec.clusters);
    if (capped) {
      report.verdict = Verdict::Timeout;
      report.note = list.size() >= kMaxFrameList ? "frame list for " + std::string(kind_name(kind)) + " exceeds the cap"
                                                 : "budget exhausted while generating frames";
      report.stats.ms = elapsed_ms(start);
      return report;
    }
    if (run.symmetric) {
      auto& c = codes[kind];
      c.reserve(list.size());
      for (const auto& r : list) c.push_back(relation_code(r));
    }
  }
  for (const auto& [name, kind] : spec.agents) {
    run.lists.push_back(&lists[kind]);
    run.codes.push_back(run.symmetric ? &codes[kind] : nullptr);
  }
  if (run.symmetric) run.group = all_permutations(n);

  const unsigned jobs = std::max(1U, spec.jobs);
  if (jobs == 1) {
    worker(run);
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back([&run] { worker(run); });
    for (auto& t : threads) t.join();
  }

  report.stats = run.stats;
  report.stats.ms = elapsed_ms(start);
  if (run.witness) {
    reverify(*run.witness, run.witness_point, spec.formula);
    report.verdict = Verdict::Sat;
    if (witness) *witness = run.witness;
    if (point) *point = run.witness_point;
  } else if (run.timed_out) {
    report.verdict = Verdict::Timeout;
    report.note = "budget exhausted";
  } else {
    report.verdict = Verdict::Unsat;
  }
  return report;
}

SearchOutcome sat_search(const SearchSpec& spec) {
  validate_spec(spec, atom_list(spec));
  const auto start = Clock::now();
  SearchOutcome out;
  for (std::size_t n = spec.min_size; n <= spec.max_size; ++n) {
    SearchSpec sized = spec;
    if (spec.budget_seconds > 0) {
      sized.budget_seconds = spec.budget_seconds - elapsed_ms(start) / 1000.0;
      if (sized.budget_seconds <= 0) {
        out.verdict = Verdict::Timeout;
        break;
      }
    }
    SizeReport r = search_size(sized, n, &out.model, &out.point);
    out.stats += r.stats;
    out.sizes.push_back(r);
    if (r.verdict == Verdict::Sat) {
      out.verdict = Verdict::Sat;
      out.bound = n;
      break;
    }
    if (r.verdict == Verdict::Timeout) {
      out.verdict = Verdict::Timeout;
      break;
    }
    out.bound = n;
  }
  out.stats.ms = elapsed_ms(start);
  return out;
}

nlohmann::json outcome_to_json(const SearchOutcome& outcome, const std::string& formula, const std::string& klass) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : outcome.sizes) {
    nlohmann::json row = {{"n", r.n},
                          {"verdict", verdict_name(r.verdict)},
                          {"models_checked", r.stats.models_checked},
                          {"ms", r.stats.ms}};
    if (!r.note.empty()) row["note"] = r.note;
    results.push_back(std::move(row));
  }
  nlohmann::json j = {{"formula", formula},
                      {"class", klass},
                      {"verdict", verdict_name(outcome.verdict)},
                      {"bound", outcome.bound},
                      {"results", std::move(results)}};
  if (outcome.model) {
    j["model"] = model_to_json(*outcome.model);
    j["point"] = outcome.model->point_name(*outcome.point);
  }
  return j;
}

std::string outcome_table(const SearchOutcome& outcome) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%4s  %-8s %10s %10s %16s %12s\n", "n", "verdict", "frames", "pruned", "models_checked",
                "ms");
  os << line;
  for (const auto& r : outcome.sizes) {
    std::snprintf(line, sizeof line, "%4zu  %-8s %10llu %10llu %16llu %12.1f", r.n, std::string(verdict_name(r.verdict)).c_str(),
                  static_cast<unsigned long long>(r.stats.frames), static_cast<unsigned long long>(r.stats.frames_pruned),
                  static_cast<unsigned long long>(r.stats.models_checked), r.stats.ms);
    os << line;
    if (!r.note.empty()) os << "  (" << r.note << ")";
    os << '\n';
  }
  return os.str();
}

std::vector<std::vector<std::size_t>> cycle_types(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> parts;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t cap) {
    if (left == 0) {
      out.push_back(parts);
      return;
    }
    for (std::size_t p = std::min(left, cap); p >= 1; --p) {
      parts.push_back(p);
      rec(left - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
  return out;
}

namespace {

// Point permutations generated by rotating each cycle independently.
std::vector<std::vector<std::size_t>> rotations(const std::vector<std::size_t>& type) {
  std::vector<std::vector<std::size_t>> out;
  std::size_t n = 0;
  for (auto len : type) n += len;
  std::vector<std::size_t> shift(type.size(), 0);
  while (true) {
    std::vector<std::size_t> perm(n);
    std::size_t start = 0;
    for (std::size_t c = 0; c < type.size(); ++c) {
      for (std::size_t j = 0; j < type[c]; ++j) perm[start + j] = start + (j + shift[c]) % type[c];
      start += type[c];
    }
    out.push_back(std::move(perm));
    std::size_t c = 0;
    while (c < type.size() && ++shift[c] == type[c]) shift[c++] = 0;
    if (c == type.size()) break;
  }
  return out;
}

std::uint64_t permute_valuation(std::uint64_t mask, std::size_t n, std::size_t atoms, const std::vector<std::size_t>& perm) {
  std::uint64_t out = 0;
  for (std::size_t t = 0; t < atoms; ++t) {
    for (std::size_t x = 0; x < n; ++x) {
      if ((mask >> (t * n + x)) & 1U) out |= std::uint64_t{1} << (t * n + perm[x]);
    }
  }
  return out;
}

}  // namespace

PltlSearchOutcome pltl_finite_search(const syntax::PltlFormula& f, std::size_t max_size, double budget_seconds) {
  if (max_size < 1 || max_size > kMaxSearchSize) throw PreconditionError("carrier size out of range");
  const auto used = syntax::atoms_of(f);
  const std::vector<std::string> atoms(used.begin(), used.end());
  if (max_size * atoms.size() > 24) throw PreconditionError("too many valuations to enumerate");

  const Deadline deadline(budget_seconds);
  const auto start = Clock::now();
  PltlSearchOutcome out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    const auto size_start = Clock::now();
    SizeReport report;
    report.n = n;
    bool stop = false;
    for (const auto& type : cycle_types(n)) {
      std::vector<std::size_t> succ(n);
      std::size_t first = 0;
      for (auto len : type) {
        for (std::size_t j = 0; j < len; ++j) succ[first + j] = first + (j + 1) % len;
        first += len;
      }
      ++report.stats.frames;
      pltl::BijectiveModel m(succ);
      const auto group = rotations(type);
      const std::uint64_t total = std::uint64_t{1} << (n * atoms.size());
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        if ((mask & 0xff) == 0 && deadline.passed()) {
          report.verdict = Verdict::Timeout;
          report.note = "budget exhausted";
          stop = true;
          break;
        }
        const bool minimal = std::all_of(group.begin(), group.end(), [&](const auto& p) {
          return permute_valuation(mask, n, atoms.size(), p) >= mask;
        });
        if (!minimal) {
          ++report.stats.frames_pruned;
          continue;
        }
        for (std::size_t t = 0; t < atoms.size(); ++t) {
          m.set_valuation(atoms[t], PointSet::from_mask(n, (mask >> (t * n)) & ((std::uint64_t{1} << n) - 1)));
        }
        ++report.stats.models_checked;
        ++report.stats.evaluations;
        const PointSet truth = pltl::eval_pltl_finite(m, f);
        if (!truth.empty()) {
          const std::size_t w = truth.members().front();
          if (!pltl::holds_pltl_at(m, w, f)) throw std::logic_error("PLTL witness fails re-verification");
          report.verdict = Verdict::Sat;
          out.model = m;
          out.point = w;
          stop = true;
          break;
        }
      }
      if (stop) break;
    }
    report.stats.ms = elapsed_ms(size_start);
    out.stats += report.stats;
    out.sizes.push_back(report);
    if (report.verdict != Verdict::Unsat) {
      out.verdict = report.verdict;
      if (report.verdict == Verdict::Sat) out.bound = n;
      break;
    }
    out.bound = n;
  }
  out.stats.ms = elapsed_ms(start);
  return out;
}

}  // namespace tpdl::search
