#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sipot::cli {

enum ExitCode : int {
  ok = 0,
  verification_failure = 1,
  bad_arguments = 2,
  computation_error = 3,
};

/// Runs the command line `args` (without the program name), writing the report to `out`
/// and diagnostics to `err`. When SIPOT_OUTPUT_DIR is set, or --output-file is given,
/// the report is also written to a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sipot::cli
