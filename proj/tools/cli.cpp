#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "lpcd/io.hpp"
#include "lpcd/quality.hpp"
#include "runner.hpp"

namespace lpcd::cli {

namespace {

struct GraphFlags {
  std::string input;
  bool no_self_loops = false;
  bool keep_weights = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("-i,--input", input, "Graph file (.mtx or edge list)")->required();
    cmd->add_flag("--no-self-loops", no_self_loops,
                  "Do not add a unit self-loop to every vertex");
    cmd->add_flag("--keep-weights", keep_weights, "Keep input edge weights");
  }
  PreprocessOptions options() const { return {!keep_weights, !no_self_loops}; }
  Graph load() const { return preprocess(load_graph(input), options()); }
};

const std::vector<std::string> kAlgorithms{"rak", "copra", "slpa"};

std::string fmt(const char* pattern, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, value);
  return buf;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Label propagation community detection (RAK, COPRA, SLPA)", "lpcd"};
  app.require_subcommand(1);

  // detect
  auto* detect = app.add_subcommand("detect", "Detect communities and write a TSV");
  GraphFlags detect_graph;
  detect_graph.attach(detect);
  std::string algorithm = "rak";
  std::optional<double> tolerance;
  RunConfig config;
  config.workers = default_workers();
  std::string output = "-";
  detect->add_option("-a,--algorithm", algorithm)
      ->check(CLI::IsMember(kAlgorithms))
      ->capture_default_str();
  detect->add_option("-o,--output", output, "TSV path, '-' for stdout")->capture_default_str();
  detect->add_option("--tolerance", tolerance,
                     "Convergence fraction [rak/slpa 0.05, copra 0.01]");
  detect->add_flag("--strict,!--non-strict", config.strict, "Tie-break mode")
      ->capture_default_str();
  detect->add_option("--threads", config.workers, "Workers [LPCD_THREADS or 1]")
      ->check(CLI::PositiveNumber);
  detect->add_option("--seed", config.seed)->capture_default_str();
  detect->add_option("--max-iterations", config.max_iterations)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  detect->add_option("--max-labels", config.max_labels, "COPRA labels per vertex")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  detect->add_option("--memory-size", config.memory_size, "SLPA memory slots")
      ->check(CLI::Range(2, 1 << 20))
      ->capture_default_str();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Run a parameter grid and emit CSV");
  SweepSpec spec;
  spec.workers = {default_workers()};
  std::string sweep_algorithm = "rak";
  std::vector<std::string> modes{"strict", "non-strict"};
  std::string sweep_output = "-";
  bool sweep_no_self_loops = false, sweep_keep_weights = false;
  sweep->add_option("-a,--algorithm", sweep_algorithm)
      ->check(CLI::IsMember(kAlgorithms))
      ->capture_default_str();
  sweep->add_option("-g,--graphs", spec.graphs, "Graph files");
  sweep->add_option("--tolerances", spec.tolerances)->delimiter(',')->capture_default_str();
  sweep->add_option("--max-labels", spec.max_labels)->delimiter(',')->capture_default_str();
  sweep->add_option("--memory-sizes", spec.memory_sizes)->delimiter(',')->capture_default_str();
  sweep->add_option("--modes", modes)
      ->delimiter(',')
      ->check(CLI::IsMember({"strict", "non-strict"}))
      ->capture_default_str();
  sweep->add_option("--workers", spec.workers, "Worker counts [LPCD_THREADS or 1]")
      ->delimiter(',');
  sweep->add_option("--repetitions", spec.repetitions)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--seed", spec.seed)->capture_default_str();
  sweep->add_option("--slpa-tolerance", spec.slpa_tolerance)->capture_default_str();
  sweep->add_option("--max-iterations", spec.max_iterations)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("-o,--output", sweep_output, "CSV path, '-' for stdout")
      ->capture_default_str();
  sweep->add_flag("--no-self-loops", sweep_no_self_loops);
  sweep->add_flag("--keep-weights", sweep_keep_weights);

  // score
  auto* score = app.add_subcommand("score", "Modularity of a community TSV");
  GraphFlags score_graph;
  score_graph.attach(score);
  std::string assignment_path;
  int digits = 6;
  score->add_option("-c,--assignment", assignment_path, "vertex<TAB>community file")
      ->required();
  score->add_option("--digits", digits, "Decimal places")
      ->check(CLI::Range(0, 17))
      ->capture_default_str();

  // info
  auto* info = app.add_subcommand("info", "Print vertex/edge statistics");
  GraphFlags info_graph;
  info_graph.attach(info);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  try {
    if (*detect) {
      config.algorithm = *parse_algorithm(algorithm);
      config.tolerance = tolerance.value_or(default_tolerance(config.algorithm));
      const Graph graph = detect_graph.load();
      const DetectionResult r = run_detection(graph, config);
      if (output == "-") {
        write_assignment_tsv(out, r.assignment);
      } else {
        std::ofstream file(output);
        if (!file) {
          err << "error: cannot write " << output << '\n';
          return kExitFailure;
        }
        write_assignment_tsv(file, r.assignment);
      }
      char buf[256];
      std::snprintf(buf, sizeof buf,
                    "%s: iterations=%d elapsed_ms=%.3f modularity=%.12f communities=%zu\n",
                    algorithm.c_str(), r.iterations, r.elapsed.count(), r.modularity,
                    r.assignment.community_count());
      err << buf;
      return kExitOk;
    }

    if (*sweep) {
      spec.algorithm = *parse_algorithm(sweep_algorithm);
      spec.strict_modes.clear();
      for (const auto& m : modes) spec.strict_modes.push_back(m == "strict");
      spec.preprocess = {!sweep_keep_weights, !sweep_no_self_loops};
      if (spec.tolerances.empty() || spec.max_labels.empty() ||
          spec.memory_sizes.empty() || spec.strict_modes.empty() || spec.workers.empty()) {
        err << "error: parameter grids must be non-empty\n";
        return kExitUsage;
      }
      if (sweep_output == "-") {
        run_sweep(spec, out, err);
      } else {
        std::ofstream file(sweep_output);
        if (!file) {
          err << "error: cannot write " << sweep_output << '\n';
          return kExitFailure;
        }
        run_sweep(spec, file, err);
      }
      return kExitOk;
    }

    if (*score) {
      const Graph graph = score_graph.load();
      std::ifstream in(assignment_path);
      if (!in) {
        err << "error: cannot open " << assignment_path << '\n';
        return kExitFailure;
      }
      const CommunityAssignment a = read_assignment_tsv(in, graph.vertex_count());
      const std::string pattern = "%." + std::to_string(digits) + "f";
      out << fmt(pattern.c_str(), modularity(graph, a)) << '\n';
      return kExitOk;
    }

    if (*info) {
      const Graph graph = info_graph.load();
      const std::size_t n = graph.vertex_count();
      out << "vertices\t" << n << '\n'
          << "arcs\t" << graph.arc_count() << '\n'
          << "avg_degree\t"
          << fmt("%.2f", n ? static_cast<double>(graph.arc_count()) / n : 0.0) << '\n'
          << "self_loops\t" << graph.self_loop_count() << '\n'
          << "total_weight\t" << fmt("%.1f", graph.total_weight()) << '\n';
      return kExitOk;
    }
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace lpcd::cli
