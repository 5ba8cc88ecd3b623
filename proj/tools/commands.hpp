#pragma once

// Subcommands of the cantorq tool. Each returns the full text it would print
// plus the process exit code, so tests can drive them without a subprocess.

#include <cstdint>
#include <iosfwd>
#include <string>

namespace cantorq::cli {

enum class Format { json, csv };

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

struct CommandResult {
  int exit_code = kSuccess;
  std::string out;
  std::string err;
};

/// `selector` is "canonical", "all", or a comma-separated list of words
/// ("" or "none" for the empty split set).
CommandResult optimal_set(std::uint32_t n, const std::string& selector, Format format);

CommandResult error_table(std::uint32_t max_n, Format format);

CommandResult verify(std::uint32_t max_n, int level, int max_refine_depth, Format format);

/// `kind` is "dimension" or "coefficient".
CommandResult asymptotics(const std::string& kind, int max_level, bool plot_data, Format format);

/// Full command line entry point (CLI11 parsing + dispatch).
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

/// "%.12g".
std::string format_float(double value);

}  // namespace cantorq::cli
