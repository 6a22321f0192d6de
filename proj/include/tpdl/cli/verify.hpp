#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace tpdl::verify {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // the first few, described

  bool ok() const noexcept { return failed == 0; }
};

/// "axioms", "theorem1", "theorem2", "lemmas", "restriction".
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all", on `iterations` random instances
/// each. Instances depend only on (seed, suite). Throws PreconditionError for
/// an unknown suite name.
std::vector<SuiteResult> run_suite(const std::string& name, std::uint64_t seed, std::size_t iterations);

nlohmann::json results_to_json(const std::vector<SuiteResult>& results);
std::string results_table(const std::vector<SuiteResult>& results);

}  // namespace tpdl::verify
