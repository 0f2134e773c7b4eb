#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace swarmtsp::cli {

/// Exit codes: 0 success, 1 internal failure, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `swarmtsp` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace swarmtsp::cli
