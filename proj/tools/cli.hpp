#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pbquad::cli {

// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kParseError = 2,
    kInvalidInput = 3,
    kCapExceeded = 4,
};

// Runs one command line (args excludes the program name) and returns the
// exit code. Regular output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbquad::cli
