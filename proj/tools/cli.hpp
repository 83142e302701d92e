#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace popmatch::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kNegative = 1,      // unpopular matching, or witness with conflicts
  kInputError = 2,
  kNoPopular = 3,
  kScaleLimit = 4,
  kInternalError = 5,
};

// Runs the command line (args excludes the program name). Results go to `out`
// as JSON or instance text; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace popmatch::cli
