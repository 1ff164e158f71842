#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circforce::cli {

enum ExitCode : int {
    Ok = 0,
    Failure = 1,
    UsageError = 2,
    CeilingExceeded = 3,
    ContradictionFound = 4,
};

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace circforce::cli
