#pragma once

#include <cstdint>

#include "lpcd/detection.hpp"
#include "lpcd/graph.hpp"

namespace lpcd {

struct RakParams {
  /// Stop once at most this fraction of vertices changed label in a sweep.
  double tolerance = 0.05;
  /// Tie-break: first maximum in scan order (strict) or uniform random.
  bool strict = true;
  int max_iterations = 100;
  /// 1 runs the sequential variant.
  int workers = 1;
  std::uint32_t seed = 1;
};

void validate(const RakParams& params);

/**
 * RAK / LPA on a preprocessed graph.
 *
 * Labels start as vertex ids. Each sweep visits vertices in index order (or
 * in dynamic chunks across workers) and lets every vertex adopt the label
 * with the largest total weight among its neighbors, its own self-loop
 * included. Updates are asynchronous: later vertices see earlier adoptions
 * from the same sweep.
 */
DetectionResult rak_detect(const Graph& graph, const RakParams& params,
                           const IterationObserver& observer = {});

}  // namespace lpcd
