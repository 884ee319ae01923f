#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gmsrg::cli {

// Exit codes.
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;
inline constexpr int usage_error = 2;

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gmsrg::cli
