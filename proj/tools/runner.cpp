#include "runner.hpp"

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <ostream>

#include "lpcd/copra.hpp"
#include "lpcd/io.hpp"
#include "lpcd/rak.hpp"
#include "lpcd/slpa.hpp"

namespace lpcd::cli {

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "rak") return Algorithm::kRak;
  if (name == "copra") return Algorithm::kCopra;
  if (name == "slpa") return Algorithm::kSlpa;
  return std::nullopt;
}

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kRak: return "rak";
    case Algorithm::kCopra: return "copra";
    case Algorithm::kSlpa: return "slpa";
  }
  return "?";
}

double default_tolerance(Algorithm a) {
  return a == Algorithm::kCopra ? 0.01 : 0.05;
}

DetectionResult run_detection(const Graph& graph, const RunConfig& c) {
  switch (c.algorithm) {
    case Algorithm::kRak:
      return rak_detect(graph, {c.tolerance, c.strict, c.max_iterations, c.workers, c.seed});
    case Algorithm::kCopra:
      return copra_detect(graph, {c.tolerance, c.max_labels, c.max_iterations, c.workers, c.seed});
    case Algorithm::kSlpa:
      return slpa_detect(graph, {c.memory_size, c.tolerance, c.strict, c.workers, c.seed});
  }
  throw ContractViolation("unknown algorithm");
}

int default_workers() {
  if (const char* env = std::getenv("LPCD_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

std::size_t runs_per_graph(const SweepSpec& spec) {
  std::size_t grid = 0;
  switch (spec.algorithm) {
    case Algorithm::kRak:
      grid = spec.tolerances.size() * spec.strict_modes.size();
      break;
    case Algorithm::kCopra:
      grid = spec.tolerances.size() * spec.max_labels.size();
      break;
    case Algorithm::kSlpa:
      grid = spec.memory_sizes.size() * spec.strict_modes.size();
      break;
  }
  return grid * spec.workers.size() * static_cast<std::size_t>(spec.repetitions);
}

namespace {

std::string mode_name(const RunConfig& c) {
  // COPRA has no strict mode; its fallback pick is always random.
  if (c.algorithm == Algorithm::kCopra) return "random";
  return c.strict ? "strict" : "non-strict";
}

void write_row(std::ostream& csv, const std::string& graph, const RunConfig& c,
               const DetectionResult& r) {
  char buf[512];
  const bool copra = c.algorithm == Algorithm::kCopra;
  const bool slpa = c.algorithm == Algorithm::kSlpa;
  std::snprintf(buf, sizeof buf, "%s,%s,%s,%g,%s,%s,%d,%u,%d,%.3f,%.9f\n",
                graph.c_str(), std::string(algorithm_name(c.algorithm)).c_str(),
                mode_name(c).c_str(), c.tolerance,
                copra ? std::to_string(c.max_labels).c_str() : "",
                slpa ? std::to_string(c.memory_size).c_str() : "", c.workers, c.seed,
                r.iterations, r.elapsed.count(), r.modularity);
  csv << buf << std::flush;
}

std::vector<RunConfig> grid_for(const SweepSpec& spec) {
  std::vector<RunConfig> out;
  RunConfig base;
  base.algorithm = spec.algorithm;
  base.max_iterations = spec.max_iterations;
  switch (spec.algorithm) {
    case Algorithm::kRak:
      for (double t : spec.tolerances) {
        for (bool s : spec.strict_modes) {
          RunConfig c = base;
          c.tolerance = t;
          c.strict = s;
          out.push_back(c);
        }
      }
      break;
    case Algorithm::kCopra:
      for (double t : spec.tolerances) {
        for (int m : spec.max_labels) {
          RunConfig c = base;
          c.tolerance = t;
          c.max_labels = m;
          out.push_back(c);
        }
      }
      break;
    case Algorithm::kSlpa:
      for (int m : spec.memory_sizes) {
        for (bool s : spec.strict_modes) {
          RunConfig c = base;
          c.tolerance = spec.slpa_tolerance;
          c.memory_size = m;
          c.strict = s;
          out.push_back(c);
        }
      }
      break;
  }
  return out;
}

}  // namespace

std::size_t run_sweep(const SweepSpec& spec, std::ostream& csv, std::ostream& err) {
  LPCD_EXPECTS(spec.repetitions >= 1, "repetitions must be >= 1");
  csv << kSweepHeader << '\n' << std::flush;
  const auto grid = grid_for(spec);
  std::size_t rows = 0;
  for (const std::string& path : spec.graphs) {
    Graph graph;
    try {
      graph = preprocess(load_graph(path), spec.preprocess);
    } catch (const std::exception& e) {
      err << "warning: skipping " << path << ": " << e.what() << '\n';
      continue;
    }
    const std::string name = std::filesystem::path(path).stem().string();
    for (RunConfig c : grid) {
      for (int workers : spec.workers) {
        for (int rep = 0; rep < spec.repetitions; ++rep) {
          c.workers = workers;
          c.seed = spec.seed + static_cast<std::uint32_t>(rep);
          write_row(csv, name, c, run_detection(graph, c));
          ++rows;
        }
      }
    }
  }
  return rows;
}

}  // namespace lpcd::cli
