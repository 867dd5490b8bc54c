#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hofseq::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kRuntime = 3,
};

/// Runs the command line `args` (without the program name). Human-readable
/// summaries go to `out`, diagnostics and timings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hofseq::cli
