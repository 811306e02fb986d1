#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace phg {

// Exit codes of the command-line front end.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kHypothesisViolation = 2,
    kUnsupportedDisk = 3,
    kPrecisionExhausted = 4,
};

// Parses argv-style arguments (without the program name) and runs the
// requested subcommand, writing all output to `out`. Identical inputs
// produce byte-identical output.
int dispatch(const std::vector<std::string>& args, std::ostream& out);

} // namespace phg
