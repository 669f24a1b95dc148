#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qhilb {

/// Stable exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 1,
    kExitCapExceeded = 2,
    kExitMismatch = 3,
};

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qhilb
