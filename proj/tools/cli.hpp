#ifndef DPP_TOOLS_CLI_HPP
#define DPP_TOOLS_CLI_HPP

#include <iosfwd>

namespace dpp::cli {

/// Exit statuses of the `dpp` tool.
enum ExitCode : int {
  kSuccess = 0,
  kDomainError = 1,
  kParseError = 2,
  kResourceCap = 3,
};

/// Runs one invocation. JSON results go to `out` (or the --output file),
/// diagnostics and progress to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace dpp::cli

#endif // DPP_TOOLS_CLI_HPP
