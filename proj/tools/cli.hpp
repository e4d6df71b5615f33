#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chaincodes::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kBudget = 3,
    kVerificationFailed = 4,
    kFailure = 5,
};

/// Runs one command line. Artifacts go to `out` (or --output), errors to `err` as one JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chaincodes::cli
