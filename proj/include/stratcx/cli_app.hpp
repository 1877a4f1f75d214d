#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stratcx/numeric.hpp"

namespace stratcx::cli {

// Exit codes: 0 ok, 1 usage or parse problem, 2 violated mathematical
// precondition, 3 verification-suite failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMath = 2;
inline constexpr int kExitVerifyFailed = 3;

struct CommandResult {
  int exit_code = kExitOk;
  std::string out; // stdout payload (report)
  std::string err; // stderr payload (diagnostics)
};

// Full CLI entry point, argv-style without the program name. Identical
// arguments (and seeds) produce byte-identical output.
CommandResult run_cli(const std::vector<std::string>& args);

std::vector<Integer> parse_integer_csv(const std::string& text);

} // namespace stratcx::cli
