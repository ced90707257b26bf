#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace amoh::cli {

/// Exit statuses of the command-line front end.
inline constexpr int kExitComputed = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInternal = 2;

/// Runs one command (args excludes the program name). Never throws.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace amoh::cli
