#ifndef APROP_CLI_HPP
#define APROP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace aprop::cli {

/// Process exit codes shared by every command.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,       // bad flags or configuration
  kData = 2,        // unreadable or invalid input data
  kNoOutcome = 3,   // no solution, abstention, unsupported explanation
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aprop::cli

#endif  // APROP_CLI_HPP
