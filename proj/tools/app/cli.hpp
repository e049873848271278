#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace databus::app {

/// Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Subcommands: estimate, sweep, table1, counterexample, verify-protocol, serve.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace databus::app
