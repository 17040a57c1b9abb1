#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rigidity::cli {

/// Environment variable consulted for the default `--seed`.
inline constexpr const char* kSeedVariable = "RIGIDITY_SEED";

enum ExitCode : int { ok = 0, parameter_error = 1, invariant_failure = 2 };

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rigidity::cli
