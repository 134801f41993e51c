#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace petcheck {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitNegative = 1,
    kExitUsage = 2,
    kExitUnknown = 3,
};

/// Name of the environment variable holding the default node budget.
inline constexpr const char* kBudgetEnv = "PETCHECK_NODE_BUDGET";

/// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace petcheck
