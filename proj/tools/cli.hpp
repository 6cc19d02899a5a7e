#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polycert::cli {

/// Exit statuses of the command line tool.
enum Status : int { kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

/// Runs the tool on `args` (without the program name), writing normal output
/// to `out` and diagnostics to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a digest, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace polycert::cli
