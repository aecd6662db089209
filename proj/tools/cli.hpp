#ifndef ARGP_TOOLS_CLI_HPP
#define ARGP_TOOLS_CLI_HPP

#include <ostream>

namespace argp::cli {

enum ExitCode : int { kOk = 0, kBoundViolated = 1, kInputError = 2, kNumericalError = 3 };

/// Parses argv, runs one subcommand and writes its report to `out` (or the
/// --out file). Diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace argp::cli

#endif  // ARGP_TOOLS_CLI_HPP
