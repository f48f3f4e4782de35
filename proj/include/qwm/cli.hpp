#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qwm::cli {

/// Exit-code convention shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kArgError = 2;
inline constexpr int kNumericalError = 3;
inline constexpr int kCapacityError = 4;

/// Dispatches one subcommand (args excludes the program name). All file and
/// stream output is deterministic for fixed args and seeds, except the
/// wall_ms timing column.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwm::cli
