#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace t3::cli {

enum class OutputMode { text, records };

struct RunConfig {
  std::string command;
  std::array<std::size_t, 3> dims{1, 1, 1};
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  std::optional<double> tolerance;
  OutputMode output = OutputMode::text;
};

enum ExitCode : int { kSuccess = 0, kCheckFailure = 1, kUsageError = 2 };

// Entry point shared by the t3tool binary and the tests. Normal output goes
// to out, diagnostics to err; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Exposed for tests.
std::string format_double(double v);

}  // namespace t3::cli
