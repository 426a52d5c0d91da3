#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pert::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 2,
  kDomainError = 3,
  kParseError = 4,
};

enum class OutputFormat { Table, Csv, Json };

struct RunConfig {
  std::string command;
  std::string mode = "rational";  // rational | float
  int order = 2;
  double grid_start = 0x1p-4;
  double grid_ratio = 0.5;
  int grid_count = 7;
  std::vector<double> grid;  // explicit grid overrides start/ratio/count
  OutputFormat format = OutputFormat::Table;
  std::optional<double> zero_tolerance;
};

/// Runs one command. `args[0]` is the program name. Output is written to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pert::cli
