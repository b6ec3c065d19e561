#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dompoly::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitInput = 3,
};

/// Runs one command. `args` excludes the program name.
/// Results go to `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dompoly::cli
