#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace celliep::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 2;
inline constexpr int kDomainError = 3;
inline constexpr int kConvergenceError = 4;

/// Largest matrix order accepted on the command line.
inline constexpr std::size_t kMaxOrder = 200;

/// Runs one command (args exclude the program name). The JSON result, or an
/// {"error": {...}} object, goes to `out` unless --out names a file; the
/// human-readable summary goes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace celliep::cli
