#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hookforest::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 when a verification
/// fails, 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hookforest::cli
