#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trisect::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,            // success, valid, identical or slide-equivalent
    kNegative = 1,      // invalid diagram or distinct by an invariant
    kUsage = 2,         // usage, I/O or parse error
    kUndecided = 3,     // compare budget exhausted
};

/// Runs one command. `args` excludes the program name. A file argument of
/// "-" reads from `in`.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace trisect::cli
