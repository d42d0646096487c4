#ifndef POLYALG_CLI_HPP
#define POLYALG_CLI_HPP

#include <iosfwd>

namespace polyalg::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { Success = 0, DomainError = 1, UsageError = 2 };

/// Runs the tool on the given arguments, writing to `out` and `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polyalg::cli

#endif  // POLYALG_CLI_HPP
