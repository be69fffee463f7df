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

struct CopraParams {
  /// Stop once at most this fraction of vertices changed best label.
  double tolerance = 0.01;
  /// Labels with belonging below 1 / max_labels are dropped.
  int max_labels = 8;
  int max_iterations = 100;
  int workers = 1;
  std::uint32_t seed = 1;
};

void validate(const CopraParams& params);

struct LabelBelonging {
  VertexId label;
  double belonging;

  friend bool operator==(const LabelBelonging&, const LabelBelonging&) = default;
};

/// A vertex's labels, sorted by label id, with belongings summing to 1.
struct VertexLabelSet {
  std::vector<LabelBelonging> entries;
  VertexId best = 0;
};

/// Entry with the largest belonging; ties go to the smallest label id.
VertexId best_label(std::span<const LabelBelonging> entries);

/**
 * Turns an accumulated tally into a label set: normalise to sum 1, keep the
 * labels whose share is at least 1 / max_labels, and if none qualify keep one
 * random maximum with belonging 1. Survivors are renormalised and sorted by
 * label. An empty tally yields an empty set; the caller decides the fallback.
 */
VertexLabelSet collect_and_threshold(const LabelTally& tally, int max_labels,
                                     XorShift32& rng);

/**
 * Shared per-vertex label sets for asynchronous COPRA.
 *
 * Each vertex owns two fixed slots of max_labels entries. update(v) writes
 * the inactive slot and then publishes it with a release store, so readers
 * that acquire the slot index never see a partly written set. A slot is only
 * rewritten one full sweep after it was retired, and sweeps are separated by
 * a barrier, so a reader can never observe a slot being overwritten.
 */
class CopraState {
 public:
  CopraState(const Graph& graph, int max_labels);

  std::size_t vertex_count() const { return best_.size(); }
  int max_labels() const { return max_labels_; }

  std::span<const LabelBelonging> labels_of(VertexId v) const;
  VertexId best_label_of(VertexId v) const { return best_[v]; }
  std::span<const VertexId> best_labels() const { return best_; }
  VertexLabelSet snapshot(VertexId v) const;

  /// Recomputes v's set from its neighbors' current sets, skipping v's
  /// self-loop. Returns true when v's best label changed.
  bool update(VertexId v, LabelTally& tally, XorShift32& rng);

 private:
  LabelBelonging* slot_data(VertexId v, unsigned slot) {
    return entries_.data() + (2 * static_cast<std::size_t>(v) + slot) * max_labels_;
  }
  const LabelBelonging* slot_data(VertexId v, unsigned slot) const {
    return entries_.data() + (2 * static_cast<std::size_t>(v) + slot) * max_labels_;
  }

  const Graph* graph_;
  int max_labels_;
  std::vector<LabelBelonging> entries_;
  std::vector<std::uint32_t> counts_;  // 2 per vertex
  std::unique_ptr<std::atomic<std::uint8_t>[]> active_;
  std::vector<VertexId> best_;
};

/**
 * Asynchronous COPRA with disjoint projection. Every vertex starts as
 * {(own id, 1)}; the final community of a vertex is its best label.
 */
DetectionResult copra_detect(const Graph& graph, const CopraParams& params,
                             const IterationObserver& observer = {});

}  // namespace lpcd
