#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace subseq::cli {

inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kBudget = 3,
  kIo = 4,
  kInternal = 5,
};

/// Runs one command line (without the program name). Writes exactly one JSON
/// document to `out` on success and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subseq::cli
