#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rotrect::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kGenerationFailure = 3,
  kEstimationFailure = 4,
};

// Runs `rotrect <subcommand> ...`; `args` excludes the program name.
// Subcommands: synth, rectify, eval, depth, bench.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace rotrect::cli
