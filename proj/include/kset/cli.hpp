#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kset {

// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitPropertyFails = 1,
    kExitUsage = 2,
    kExitInvalidInput = 3,
};

// Runs one command. `args` excludes the program name. Reports go to `out`,
// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kset
