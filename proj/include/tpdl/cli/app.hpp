#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tpdl::cli {

enum class Command { Check, Translate, Sat, NoFmp, Verify, Pltl };

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsage = 2;

/// Runs `tpdl <subcommand> ...`; args[0] is the program name. Usage errors,
/// unreadable inputs and malformed formulas or models give kUsage; a failed
/// verification property (a suite failure, a theorem counterexample, a search
/// witness that does not re-verify) gives kViolation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tpdl::cli
