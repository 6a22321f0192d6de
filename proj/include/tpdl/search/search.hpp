#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tpdl/pltl/bijective.hpp"
#include "tpdl/search/enumerate.hpp"
#include "tpdl/spaces/model.hpp"
#include "tpdl/syntax/ast.hpp"

namespace tpdl::search {

enum class Verdict { Sat, Unsat, Timeout };

/// "SAT", "UNSAT", "TIMEOUT".
std::string_view verdict_name(Verdict v) noexcept;

/// Largest carrier any search accepts.
inline constexpr std::size_t kMaxSearchSize = 12;
/// Per-agent cap on materialised frame lists; larger lists end in TIMEOUT.
inline constexpr std::size_t kMaxFrameList = 2'000'000;

struct SearchSpec {
  syntax::Formula formula = syntax::Formula::top();
  /// One entry per agent, in enumeration order (the first agent is the outer loop).
  std::vector<std::pair<std::string, FrameKind>> agents;
  std::size_t min_size = 1;
  std::size_t max_size = 1;
  /// Atoms to valuate; empty means the formula's atoms. Must cover them.
  std::vector<std::string> atoms;
  bool symmetry_reduction = true;
  MonadicClusters clusters = MonadicClusters::PairsOnly;
  /// Wall-clock budget in seconds; 0 for none.
  double budget_seconds = 0;
  unsigned jobs = 1;
};

struct SearchStats {
  std::uint64_t frames = 0;         // agent-relation tuples examined
  std::uint64_t frames_pruned = 0;  // tuples skipped as non-canonical
  std::uint64_t models_checked = 0; // frames times all valuations of the atom list
  std::uint64_t evaluations = 0;    // formula evaluations actually run
  double ms = 0;

  SearchStats& operator+=(const SearchStats& other);
};

struct SizeReport {
  std::size_t n = 0;
  Verdict verdict = Verdict::Unsat;
  SearchStats stats;
  std::string note;
};

struct SearchOutcome {
  Verdict verdict = Verdict::Unsat;
  /// Largest n searched exhaustively; UNSAT means unsatisfiable up to it.
  std::size_t bound = 0;
  std::optional<Model> model;
  std::optional<PointId> point;
  SearchStats stats;
  std::vector<SizeReport> sizes;
};

/// Searches carriers min_size..max_size in order and stops at the first SAT
/// size. Frames are agent-relation tuples drawn from the per-kind generators;
/// with symmetry reduction (n <= 8) only tuples whose adjacency codes are
/// lexicographically minimal under point permutations are kept, agent by
/// agent. A formula that is a conjunction is split into groups of conjuncts
/// sharing atoms, so each group's valuations are enumerated separately.
///
/// A SAT witness is serialised, reloaded and re-checked with holds_at before
/// it is returned; a failed re-check throws std::logic_error.
///
/// Throws PreconditionError for an invalid spec (n outside 1..12, atoms or
/// agents not covering the formula, duplicate agents).
SearchOutcome sat_search(const SearchSpec& spec);

/// One carrier size only.
SizeReport search_size(const SearchSpec& spec, std::size_t n, std::optional<Model>* witness = nullptr,
                       std::optional<PointId>* point = nullptr);

/// { "formula", "class", "results": [{ "n", "verdict", "models_checked", "ms" }] }
nlohmann::json outcome_to_json(const SearchOutcome& outcome, const std::string& formula, const std::string& klass);
/// Fixed-width table with one row per carrier size.
std::string outcome_table(const SearchOutcome& outcome);

struct PltlSearchOutcome {
  Verdict verdict = Verdict::Unsat;
  std::size_t bound = 0;
  std::optional<pltl::BijectiveModel> model;
  std::optional<std::size_t> point;
  SearchStats stats;
  std::vector<SizeReport> sizes;
};

/// Bounded search over finite bijective models of size 1..max_size. Successor
/// maps are taken one per cycle type (cycles on consecutive points, lengths
/// non-increasing); valuations are kept only if minimal under independent
/// rotation of each cycle. Witnesses are re-checked with holds_pltl_at.
PltlSearchOutcome pltl_finite_search(const syntax::PltlFormula& f, std::size_t max_size, double budget_seconds = 0);

/// Integer partitions of n into non-increasing parts.
std::vector<std::vector<std::size_t>> cycle_types(std::size_t n);

}  // namespace tpdl::search
