#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace design_forge {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitBadParams = 2;

/// Runs the command line (without the program name). Reports go to out,
/// diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace design_forge
