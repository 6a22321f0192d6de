#include "tpdl/cli/app.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "tpdl/cli/verify.hpp"
#include "tpdl/error.hpp"
#include "tpdl/pltl/bijective.hpp"
#include "tpdl/pltl/pltl_io.hpp"
#include "tpdl/pltl/tail_set.hpp"
#include "tpdl/search/nofmp.hpp"
#include "tpdl/search/search.hpp"
#include "tpdl/semantics/eval.hpp"
#include "tpdl/spaces/model_io.hpp"
#include "tpdl/syntax/parser.hpp"
#include "tpdl/syntax/printer.hpp"
#include "tpdl/syntax/translate.hpp"

namespace tpdl::cli {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string names_of(const Model& m, const PointSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](PointId x) {
    out += (first ? "" : ", ") + m.point_name(x);
    first = false;
  });
  return out + "}";
}

nlohmann::json name_list(const Model& m, const PointSet& s) {
  nlohmann::json out = nlohmann::json::array();
  s.for_each([&](PointId x) { out.push_back(m.point_name(x)); });
  return out;
}

struct CheckArgs {
  std::string model, formula, point;
  bool json = false;
};

int do_check(const CheckArgs& a, std::ostream& out) {
  const Model m = load_model(a.model);
  const auto names = m.agent_names();
  const auto f = syntax::parse_formula(a.formula, std::set<std::string>(names.begin(), names.end()));
  const PointSet truth = semantics::evaluate(m, f);
  if (a.json) {
    nlohmann::json j = {{"formula", syntax::to_string(f)}, {"truth_set", name_list(m, truth)}};
    if (!a.point.empty()) {
      j["point"] = a.point;
      j["holds"] = truth.contains(m.point(a.point));
    }
    out << j.dump(2) << '\n';
  } else if (!a.point.empty()) {
    out << (truth.contains(m.point(a.point)) ? "true" : "false") << '\n';
  } else {
    out << names_of(m, truth) << '\n';
  }
  return kOk;
}

struct TranslateArgs {
  std::string mode, formula, agents;
};

int do_translate(const TranslateArgs& a, std::ostream& out) {
  const auto agents = split_list(a.agents);
  if (a.mode == "top") {
    const auto pair = agents.empty() ? std::vector<std::string>{"a", "b"} : agents;
    if (pair.size() != 2) throw PreconditionError("--agents for top needs exactly two agents");
    out << syntax::to_string(syntax::top_translation(syntax::parse_pltl(a.formula), pair[0], pair[1])) << '\n';
    return kOk;
  }
  const auto f = agents.empty() ? syntax::parse_formula(a.formula)
                                : syntax::parse_formula(a.formula, std::set<std::string>(agents.begin(), agents.end()));
  out << syntax::to_string(a.mode == "star" ? syntax::star_translation(f) : syntax::plus_translation(f)) << '\n';
  return kOk;
}

struct SatArgs {
  std::string klass, agents, formula, atoms, clusters = "pairs";
  std::size_t max_size = 1, min_size = 1;
  double budget = 0;
  unsigned jobs = 1;
  bool json = false, no_symmetry = false;
};

int do_sat(const SatArgs& a, std::ostream& out) {
  const auto kind = parse_kind(a.klass);
  if (!kind) throw PreconditionError("unknown frame class '" + a.klass + "'");
  const auto agents = split_list(a.agents);
  search::SearchSpec spec;
  spec.formula = syntax::parse_formula(a.formula, std::set<std::string>(agents.begin(), agents.end()));
  for (const auto& name : agents) spec.agents.emplace_back(name, *kind);
  spec.atoms = split_list(a.atoms);
  spec.min_size = a.min_size;
  spec.max_size = a.max_size;
  spec.budget_seconds = a.budget;
  spec.jobs = a.jobs;
  spec.symmetry_reduction = !a.no_symmetry;
  spec.clusters = a.clusters == "any"                ? search::MonadicClusters::Any
                  : a.clusters == "pairs-singletons" ? search::MonadicClusters::PairsAndSingletons
                                                     : search::MonadicClusters::PairsOnly;
  const auto outcome = search::sat_search(spec);
  const std::string printed = syntax::to_string(spec.formula);
  if (a.json) {
    out << search::outcome_to_json(outcome, printed, a.klass).dump(2) << '\n';
    return kOk;
  }
  out << "formula: " << printed << "\nclass: " << a.klass << "\n\n" << search::outcome_table(outcome) << '\n';
  switch (outcome.verdict) {
    case search::Verdict::Sat:
      out << "SAT at point " << outcome.model->point_name(*outcome.point) << " of\n"
          << model_to_json(*outcome.model).dump(2) << '\n';
      break;
    case search::Verdict::Unsat: out << "UNSAT up to n = " << outcome.bound << '\n'; break;
    case search::Verdict::Timeout: out << "TIMEOUT (exhaustive up to n = " << outcome.bound << ")\n"; break;
  }
  return kOk;
}

struct NoFmpArgs {
  std::size_t max_size = 6, wk4_max_size = 4, unfiltered_max_size = 4;
  double budget = 0;
  unsigned jobs = 1;
  bool json = false;
};

int do_nofmp(const NoFmpArgs& a, std::ostream& out) {
  search::NoFmpOptions opts;
  opts.max_size = a.max_size;
  opts.wk4_max_size = a.wk4_max_size;
  opts.unfiltered_max_size = a.unfiltered_max_size;
  opts.budget_seconds = a.budget;
  opts.jobs = a.jobs;
  const auto report = search::nofmp_experiment(opts);
  if (a.json) {
    out << search::report_to_json(report).dump(2) << '\n';
  } else {
    out << search::report_table(report);
  }
  return report.counterexamples.empty() ? kOk : kViolation;
}

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t iterations = 100;
  bool json = false;
};

int do_verify(const VerifyArgs& a, std::ostream& out) {
  const auto results = verify::run_suite(a.suite, a.seed, a.iterations);
  if (a.json) {
    out << verify::results_to_json(results).dump(2) << '\n';
  } else {
    out << verify::results_table(results);
  }
  for (const auto& r : results) {
    if (!r.ok()) return kViolation;
  }
  return kOk;
}

struct PltlArgs {
  std::string model, formula;
  bool tail = false, json = false;
};

int do_pltl(const PltlArgs& a, std::ostream& out) {
  const auto f = syntax::parse_pltl(a.formula);
  const auto j = pltl::read_json_file(a.model);
  if (a.tail) {
    const auto truth = pltl::eval_pltl_tail(pltl::tail_model_from_json(j), f);
    if (a.json) {
      out << nlohmann::json{{"formula", syntax::to_string(f)}, {"truth_set", pltl::tail_set_to_json(truth)}}.dump(2) << '\n';
    } else {
      out << truth.to_string() << '\n';
    }
    return kOk;
  }
  const auto truth = pltl::eval_pltl_finite(pltl::bijective_from_json(j), f);
  if (a.json) {
    out << nlohmann::json{{"formula", syntax::to_string(f)}, {"truth_set", truth.members()}}.dump(2) << '\n';
  } else {
    out << truth << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workbench for polytopological PDL over finite derivative spaces", "tpdl"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Model-check a formula on a model file");
  c->add_option("--model", check.model, "Model JSON")->required();
  c->add_option("--formula", check.formula, "Formula")->required();
  c->add_option("--point", check.point, "Report truth at this point only");
  c->add_flag("--json", check.json);

  TranslateArgs translate;
  auto* t = app.add_subcommand("translate", "Apply a formula translation");
  t->add_option("--mode", translate.mode)->required()->check(CLI::IsMember({"star", "plus", "top"}));
  t->add_option("--formula", translate.formula)->required();
  t->add_option("--agents", translate.agents, "Comma-separated agents (top: the two agents, default a,b)");

  SatArgs sat;
  auto* s = app.add_subcommand("sat", "Bounded finite-model search");
  s->add_option("--class", sat.klass, "Frame kind for every agent")->required();
  s->add_option("--agents", sat.agents, "Comma-separated agents")->required();
  s->add_option("--max-size", sat.max_size)->required()->check(CLI::Range(1, 12));
  s->add_option("--min-size", sat.min_size)->check(CLI::Range(1, 12));
  s->add_option("--formula", sat.formula)->required();
  s->add_option("--atoms", sat.atoms, "Comma-separated atoms (default: those of the formula)");
  s->add_option("--clusters", sat.clusters, "monadic-derivative clusters")
      ->check(CLI::IsMember({"pairs", "pairs-singletons", "any"}));
  s->add_option("--budget", sat.budget, "Seconds; 0 for none");
  s->add_option("--jobs", sat.jobs)->check(CLI::Range(1, 256));
  s->add_flag("--no-symmetry", sat.no_symmetry);
  s->add_flag("--json", sat.json);

  NoFmpArgs nofmp;
  auto* n = app.add_subcommand("nofmp", "Finite unsatisfiability of the non-FMP witness");
  n->add_option("--max-size", nofmp.max_size)->required()->check(CLI::Range(2, 12));
  n->add_option("--budget", nofmp.budget, "Seconds; 0 for none");
  n->add_option("--wk4-max-size", nofmp.wk4_max_size)->check(CLI::Range(0, 12));
  n->add_option("--unfiltered-max-size", nofmp.unfiltered_max_size)->check(CLI::Range(0, 12));
  n->add_option("--jobs", nofmp.jobs)->check(CLI::Range(1, 256));
  n->add_flag("--json", nofmp.json);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run the verification suites on random instances");
  std::vector<std::string> suites = verify::suite_names();
  suites.push_back("all");
  v->add_option("--suite", verify.suite)->required()->check(CLI::IsMember(suites));
  v->add_option("--seed", verify.seed)->required();
  v->add_option("--iterations", verify.iterations)->required();
  v->add_flag("--json", verify.json);

  PltlArgs pltl_args;
  auto* p = app.add_subcommand("pltl", "Evaluate a PLTL formula on a bijective or integer model");
  p->add_option("--model", pltl_args.model)->required();
  p->add_option("--formula", pltl_args.formula)->required();
  p->add_flag("--tail", pltl_args.tail, "Model is an eventually constant model over the integers");
  p->add_flag("--json", pltl_args.json);

  std::vector<char*> argv;
  std::vector<std::string> storage = args.empty() ? std::vector<std::string>{"tpdl"} : args;
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (c->parsed()) return do_check(check, out);
    if (t->parsed()) return do_translate(translate, out);
    if (s->parsed()) return do_sat(sat, out);
    if (n->parsed()) return do_nofmp(nofmp, out);
    if (v->parsed()) return do_verify(verify, out);
    if (p->parsed()) return do_pltl(pltl_args, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "verification failure: " << e.what() << '\n';
    return kViolation;
  }
  return kUsage;
}

}  // namespace tpdl::cli
