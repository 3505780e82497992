#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "k3reg/numerics/types.hpp"

namespace k3reg::app {

enum class Format { Text, Csv, Json };

/// Options shared by every subcommand.
struct RunConfig {
  std::string command;
  double rel_tol = 1e-6;
  Precision precision = Precision::Double;
  Format format = Format::Text;
  /// Empty means standard output.
  std::string output;
  std::uint64_t seed = 42;
};

namespace exit_code {
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
}  // namespace exit_code

/// Parses and runs one k3lab invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k3reg::app
