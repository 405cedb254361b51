#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sumeval::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsageOrIo = 2;

/// Runs the tool on `args` (program name first). Human-readable results go
/// to `out`, diagnostics and the effective configuration to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumeval::cli
