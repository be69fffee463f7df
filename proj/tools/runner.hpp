#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpcd/detection.hpp"
#include "lpcd/graph.hpp"

namespace lpcd::cli {

enum class Algorithm { kRak, kCopra, kSlpa };

std::optional<Algorithm> parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm a);

/// Everything a single detection run needs, across all three algorithms.
struct RunConfig {
  Algorithm algorithm = Algorithm::kRak;
  double tolerance = 0.05;
  bool strict = true;
  int max_iterations = 100;
  int max_labels = 8;
  int memory_size = 10;
  int workers = 1;
  std::uint32_t seed = 1;
};

double default_tolerance(Algorithm a);

DetectionResult run_detection(const Graph& graph, const RunConfig& config);

/// Thread count from LPCD_THREADS, else 1.
int default_workers();

struct SweepSpec {
  Algorithm algorithm = Algorithm::kRak;
  std::vector<std::string> graphs;
  std::vector<double> tolerances{0.1, 0.05, 0.01, 0.001, 0.0001};
  std::vector<int> max_labels{1, 2, 4, 8, 16, 32};
  std::vector<int> memory_sizes{5, 10, 20, 40};
  std::vector<bool> strict_modes{true, false};
  std::vector<int> workers{1};
  int repetitions = 1;
  std::uint32_t seed = 1;
  /// SLPA sweeps memory_size x mode at this fixed tolerance.
  double slpa_tolerance = 0.05;
  int max_iterations = 100;
  PreprocessOptions preprocess;
};

inline constexpr std::string_view kSweepHeader =
    "graph,algorithm,mode,tolerance,max_labels,memory_size,workers,seed,"
    "iterations,elapsed_ms,modularity";

/// Runs per graph for this spec: RAK tolerance x mode, COPRA tolerance x
/// max_labels, SLPA memory_size x mode; each times workers x repetitions.
std::size_t runs_per_graph(const SweepSpec& spec);

/**
 * Writes the CSV header and one row per finished run. Repetition r runs with
 * seed + r. A graph that fails to load produces a warning on err and no rows.
 * Returns the number of rows written.
 */
std::size_t run_sweep(const SweepSpec& spec, std::ostream& csv, std::ostream& err);

}  // namespace lpcd::cli
