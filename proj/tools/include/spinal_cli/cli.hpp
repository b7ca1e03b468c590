#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace spinal::cli {

enum class OutputFormat { Table, Csv, Json };

struct CliConfig {
  std::string subcommand;
  std::optional<std::string> graph_path;
  std::optional<std::string> preset;
  std::optional<std::string> word;
  std::optional<std::uint64_t> k_max;
  std::optional<std::string> matrix;
  OutputFormat format = OutputFormat::Table;
  std::optional<std::string> out_path;
  bool emit = false;
};

/// Exit codes: 0 success, 1 input error (including usage errors), 2 internal
/// invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinal::cli
