#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monopath {

/// Runs the command-line surface. Exit codes: 0 success, 1 verification or
/// certification failure, 2 oracle exhausted, 3 usage error.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monopath
