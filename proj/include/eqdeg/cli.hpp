#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eqdeg {

// Runs one CLI invocation (arguments exclude the program name) writing data
// to `out` and diagnostics to `err`.  Returns the process exit code:
//   0 success, 1 verification mismatch, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqdeg
