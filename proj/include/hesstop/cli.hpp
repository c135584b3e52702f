#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hesstop/homopoly.hpp"

namespace hesstop::cli {

enum class OutputFormat { Text, Json };

/// Parsed command line: one subcommand plus its flags.
struct Config {
  std::string subcommand;
  OutputFormat format = OutputFormat::Text;
  bool verbose = false;
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

/// "P:m", "Q:k" or "f:m,k".
HomoPoly parse_family(const std::string& text);

/// Runs the tool; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hesstop::cli
