#pragma once

// Shared machinery of the three propagation kernels.

#include <omp.h>

#include <cstdint>
#include <memory>
#include <vector>

#include "lpcd/detection.hpp"
#include "lpcd/label_tally.hpp"
#include "lpcd/xorshift.hpp"

namespace lpcd::detail {

struct Worker {
  Worker(std::size_t labels, std::uint32_t seed) : tally(labels), rng(seed) {}
  LabelTally tally;
  XorShift32 rng;
};

// Each worker is a separate heap allocation; tallies are never packed into
// one contiguous buffer.
inline std::vector<std::unique_ptr<Worker>> make_workers(std::size_t labels,
                                                         int count,
                                                         std::uint32_t seed) {
  std::vector<std::unique_ptr<Worker>> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    out.push_back(std::make_unique<Worker>(
        labels, worker_seed(seed, static_cast<std::uint32_t>(k))));
  }
  return out;
}

// Runs body(worker, v) for every vertex and returns how many calls returned
// true. Per-thread counts are summed once at the end of the sweep.
template <class Body>
std::size_t count_over_vertices(std::size_t n,
                                std::vector<std::unique_ptr<Worker>>& workers,
                                Body&& body) {
  const auto count = static_cast<std::int64_t>(n);
  const int threads = static_cast<int>(workers.size());
  std::size_t changed = 0;
#pragma omp parallel num_threads(threads) reduction(+ : changed)
  {
    Worker& w = *workers[omp_get_thread_num()];
#pragma omp for schedule(dynamic, kParallelChunk)
    for (std::int64_t v = 0; v < count; ++v) {
      if (body(w, static_cast<VertexId>(v))) ++changed;
    }
  }
  return changed;
}

// Detectors require the preprocessed (symmetric) form.
inline void check_detector_input(const Graph& graph) {
#ifdef LPCD_CONTRACT_CHECKS
  LPCD_EXPECTS(graph.is_symmetric(), "detector requires a symmetric graph");
#else
  (void)graph;
#endif
}

}  // namespace lpcd::detail
