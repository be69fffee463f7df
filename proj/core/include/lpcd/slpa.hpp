#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "lpcd/detection.hpp"
#include "lpcd/graph.hpp"
#include "lpcd/label_tally.hpp"
#include "lpcd/xorshift.hpp"

namespace lpcd {

struct SlpaParams {
  /// Memory slots per vertex; at most memory_size - 1 speaking rounds run.
  int memory_size = 10;
  /// Stop early once at least (1 - tolerance) of vertices recorded the same
  /// label as in the previous round.
  double tolerance = 0.05;
  /// Listener tie-break: first maximum in scan order, or uniform random.
  bool strict = true;
  int workers = 1;
  std::uint32_t seed = 1;
};

void validate(const SlpaParams& params);

/// Modal label of a memory; ties go to the smallest label id.
VertexId most_popular_label(std::span<const VertexId> memory);

/**
 * Append-only label memories for all vertices.
 *
 * Slot 0 of every memory holds the owner's id. listen(v) appends exactly one
 * label to v's memory: the slot is written first and the fill count is then
 * published with a release store, so a concurrent speaker never reads an
 * unwritten slot.
 */
class SlpaState {
 public:
  SlpaState(const Graph& graph, int memory_size);

  std::size_t vertex_count() const { return graph_->vertex_count(); }
  int memory_size() const { return memory_size_; }

  std::uint32_t filled(VertexId v) const {
    return filled_[v].load(std::memory_order_acquire);
  }
  std::span<const VertexId> memory(VertexId v) const {
    return {slots_.data() + static_cast<std::size_t>(v) * memory_size_, filled(v)};
  }

  /**
   * One speaking round for listener v: every neighbor except v itself speaks
   * a uniformly drawn label from its filled memory (draws in CSR order), the
   * listener keeps the heaviest spoken label and appends it. A listener with
   * no other neighbors appends its own modal label. Returns the label.
   */
  VertexId listen(VertexId v, bool strict, LabelTally& tally, XorShift32& rng);

  CommunityAssignment project() const;

 private:
  const Graph* graph_;
  int memory_size_;
  std::vector<VertexId> slots_;
  std::unique_ptr<std::atomic<std::uint32_t>[]> filled_;
};

/**
 * Runs speaking rounds on a fresh state until early convergence or until
 * memory_size - 1 rounds are done. params.memory_size must match the state.
 * Returns the number of rounds performed.
 */
int slpa_propagate(SlpaState& state, const SlpaParams& params,
                   const IterationObserver& observer = {});

/**
 * SLPA with disjoint projection: the community of a vertex is the most
 * popular label in its memory after the last round. No post-processing.
 */
DetectionResult slpa_detect(const Graph& graph, const SlpaParams& params,
                            const IterationObserver& observer = {});

}  // namespace lpcd
