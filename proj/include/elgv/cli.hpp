#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace elgv::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidSignature = 1,
  kUsageError = 2,
  kAttackFailed = 3,
};

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// one-line diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace elgv::cli
