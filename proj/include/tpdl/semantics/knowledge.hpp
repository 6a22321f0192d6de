#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpdl/spaces/model.hpp"
#include "tpdl/syntax/ast.hpp"

namespace tpdl::semantics {

/// (a1 u ... u an)*, left-nested. Throws PreconditionError on an empty list.
syntax::Program group_program(const std::vector<std::string>& agents);

/// C{a1,...,an} f, i.e. [(a1 u ... u an)*] f.
syntax::Formula common_knowledge(const std::vector<std::string>& agents, const syntax::Formula& f);

struct CommonKnowledgeReport {
  std::vector<std::string> agents;
  PointSet truth;                                  // [[C{agents} f]]
  std::vector<std::pair<std::string, bool>> open_for;  // per agent: is `truth` open?

  bool jointly_open() const;
  /// A set open for every agent, contained in [[f]] and containing x: the
  /// truth set itself when x belongs to it and it is jointly open.
  std::optional<PointSet> witness(PointId x) const;
};

CommonKnowledgeReport common_knowledge_open_check(const Model& m, const std::vector<std::string>& agents,
                                                  const syntax::Formula& f);

/// (whole -> ([i]~whole & <i>~whole)) & (~whole -> ([i]whole & <i>whole))
syntax::Formula two_for(const std::string& agent, const std::string& whole = "whole");

/// two_for(a) & two_for(b). Throws PreconditionError when a == b.
syntax::Formula two_formula(const std::string& a, const std::string& b, const std::string& whole = "whole");

bool validates_two(const Model& m, const std::string& a, const std::string& b, const std::string& whole = "whole");

/// Outcome of reading off an agent's partner function: for each x the unique
/// y != x such that {x, y} is an atomic open. Either `map` is set, or
/// `failure_point` names the first point without such a partner.
struct SuccessorExtraction {
  std::optional<std::vector<PointId>> map;
  std::optional<PointId> failure_point;
  std::string reason;

  bool ok() const noexcept { return map.has_value(); }
};

SuccessorExtraction extract_successor(const Model& m, const std::string& agent);

bool is_bijection(const std::vector<PointId>& f);
/// second after first: x -> second[first[x]].
std::vector<PointId> compose(const std::vector<PointId>& first, const std::vector<PointId>& second);

}  // namespace tpdl::semantics
