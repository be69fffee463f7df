#include "lpcd/rak.hpp"

#include <atomic>
#include <numeric>

#include "lpcd/quality.hpp"
#include "worker.hpp"

namespace lpcd {

void validate(const RakParams& params) {
  LPCD_EXPECTS(params.tolerance > 0.0 && params.tolerance <= 1.0,
               "tolerance must be in (0, 1]");
  LPCD_EXPECTS(params.max_iterations >= 1, "max_iterations must be >= 1");
  LPCD_EXPECTS(params.workers >= 1, "workers must be >= 1");
}

DetectionResult rak_detect(const Graph& graph, const RakParams& params,
                           const IterationObserver& observer) {
  validate(params);
  detail::check_detector_input(graph);

  const std::size_t n = graph.vertex_count();
  DetectionResult result;
  std::vector<VertexId> labels(n);
  std::iota(labels.begin(), labels.end(), VertexId{0});
  auto workers = detail::make_workers(n, params.workers, params.seed);

  const auto start = std::chrono::steady_clock::now();
  while (n > 0 && result.iterations < params.max_iterations) {
    const std::size_t changed = detail::count_over_vertices(
        n, workers, [&](detail::Worker& w, VertexId v) {
          auto nbrs = graph.neighbors(v);
          auto ws = graph.neighbor_weights(v);
          w.tally.clear();
          for (std::size_t i = 0; i < nbrs.size(); ++i) {
            std::atomic_ref<VertexId> label(labels[nbrs[i]]);
            w.tally.add(label.load(std::memory_order_relaxed), ws[i]);
          }
          if (w.tally.empty()) return false;
          std::atomic_ref<VertexId> own(labels[v]);
          const VertexId next = choose_max_label(w.tally, params.strict, w.rng);
          if (next == own.load(std::memory_order_relaxed)) return false;
          own.store(next, std::memory_order_relaxed);
          return true;
        });
    ++result.iterations;
    if (observer) observer(result.iterations, changed, labels);
    if (static_cast<double>(changed) / static_cast<double>(n) <= params.tolerance) {
      break;
    }
  }
  result.elapsed = std::chrono::steady_clock::now() - start;

  result.assignment.labels = std::move(labels);
  result.modularity = modularity(graph, result.assignment);
  return result;
}

}  // namespace lpcd
