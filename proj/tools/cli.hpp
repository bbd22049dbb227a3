#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace compseq::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNotComplete = 1,
  kInfeasible = 2,
  kUsage = 3,
  kVerificationFailed = 4,
};

/// Runs one subcommand. args[0] is the program name. Results go to `out`;
/// failures print a single "error: <category>: <detail>" line to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace compseq::cli
