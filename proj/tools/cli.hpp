#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qg::cli {

enum ExitCode : int {
    kOk = 0,
    kUsageError = 2,
    kIdentityFailure = 3,
};

/// Runs one invocation of the command-line tool. args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qg::cli
