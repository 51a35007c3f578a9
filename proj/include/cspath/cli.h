#ifndef CSPATH_CLI_H_
#define CSPATH_CLI_H_

#include <iosfwd>

namespace cspath {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;

// Entry point of the `cspath` tool. Results go to `out`, diagnostics to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cspath

#endif  // CSPATH_CLI_H_
