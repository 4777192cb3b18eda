#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace orbitcount::cli {

enum class OutputFormat { Csv, JsonLines, Pretty };

/// Parsed command line.
struct RunConfig {
  std::string command;
  std::string input;
  std::string output;  // empty: stdout
  std::optional<OutputFormat> format;

  std::string mode = "counting";
  std::string family;
  std::size_t from = 1;
  std::optional<std::size_t> to;
  std::string edge;
  std::vector<double> grid;  // x, T or s values
  double window = 0.0;
  std::size_t max_paths = 0;  // 0: library default or ORBITCOUNT_MAX_PATHS

  std::uint64_t samples = 100'000;
  std::uint64_t seed = 1;
  unsigned threads = 0;

  std::size_t max_edges = 0;
  long long max_denominator = 1'000'000;
  double tolerance = 1e-12;

  std::string alpha = "1/3";
  std::vector<std::size_t> generations;
  std::optional<std::size_t> export_generation;
  std::optional<double> threshold;
  std::string emit_graph;
  bool residue_scan = false;
};

enum ExitCode : int { kOk = 0, kValidation = 1, kNumerical = 2, kBudget = 3 };

/// Entry point shared by the executable and the tests. `args` includes the
/// program name. Tables go to `out` (or --output), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbitcount::cli
