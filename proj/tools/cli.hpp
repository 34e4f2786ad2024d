#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trustroute::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kNegative = 2,  // not confidential, or the route hit a dead end
    kCapExceeded = 3,
};

// Runs one CLI invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace trustroute::cli
