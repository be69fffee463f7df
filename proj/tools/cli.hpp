#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpcd::cli {

/// Exit statuses of the lpcd tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // unreadable input, bad assignment
inline constexpr int kExitUsage = 2;    // bad or missing flags

/// Entry point behind `lpcd`; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpcd::cli
