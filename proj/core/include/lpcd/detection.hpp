#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <span>

#include "lpcd/graph.hpp"

namespace lpcd {

struct DetectionResult {
  CommunityAssignment assignment;
  int iterations = 0;
  /// Wall time of the propagation loop only.
  std::chrono::duration<double, std::milli> elapsed{0};
  double modularity = 0.0;
};

/**
 * Called once at the end of every iteration with the 1-based iteration
 * number, the number of vertices counted as changed in that iteration, and
 * each vertex's current community label (RAK: its label; COPRA: its best
 * label; SLPA: the label it just appended).
 */
using IterationObserver =
    std::function<void(int iteration, std::size_t changed,
                       std::span<const VertexId> labels)>;

/// Vertices per dynamically scheduled chunk in the parallel variants.
inline constexpr int kParallelChunk = 1024;

}  // namespace lpcd
