#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thr::cli {

enum ExitCode : int { Ok = 0, Mismatch = 1, Usage = 2, Internal = 3 };

/// Largest n and k + l accepted on the command line.
inline constexpr int kMaxN = 64;
inline constexpr int kMaxKEff = 256;

/// Runs the tool with `args` (program name excluded); returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thr::cli
