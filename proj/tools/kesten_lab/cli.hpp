#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kesten::cli {

inline constexpr const char* kSchema = "onc-kesten/1";

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

/// Runs one kesten-lab command. `args` excludes the program name.
/// Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kesten::cli
