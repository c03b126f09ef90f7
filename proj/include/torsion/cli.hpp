#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torsion::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kFailed = 1,          ///< verification failed / oracle disagreement
    kInvalidArguments = 2,
    kRejected = 3,        ///< precondition or hypothesis error
    kSearchExhausted = 4,
};

/// Runs the command line `torsion_forge <args...>` (args exclude the
/// program name) writing results to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace torsion::cli
