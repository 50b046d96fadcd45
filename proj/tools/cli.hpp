#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skcert::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kUnresolved = 2,  // certificate inconclusive or oracle unconfirmed
};

/// Runs one invocation. args[0] is the program name. Data goes to `out`
/// (or to the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skcert::cli
