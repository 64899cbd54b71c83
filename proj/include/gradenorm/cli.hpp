#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gradenorm::cli {

/// Process exit codes; stable across releases.
enum ExitCode : int {
  kSuccess = 0,  // success, valid certificate, no violation
  kNegative = 1,  // invalid certificate, infeasible schema, or violation found
  kUsage = 2,  // bad flags or unparsable input
};

/// Runs one `gradenorm` invocation. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gradenorm::cli
