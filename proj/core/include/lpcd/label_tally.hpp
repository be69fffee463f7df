#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lpcd/graph.hpp"
#include "lpcd/xorshift.hpp"

namespace lpcd {

/**
 * Scratch map label -> accumulated weight, one per worker.
 *
 * Backed by a dense weight array indexed by label plus the list of touched
 * labels in first-insertion order, so clear() costs O(touched) and labels()
 * reflects neighbor scan order.
 */
class LabelTally {
 public:
  explicit LabelTally(std::size_t label_capacity)
      : weight_(label_capacity, 0.0) {}

  void add(VertexId label, double w) {
    if (weight_[label] == 0.0) keys_.push_back(label);
    weight_[label] += w;
  }

  void clear() {
    for (VertexId k : keys_) weight_[k] = 0.0;
    keys_.clear();
  }

  bool empty() const { return keys_.empty(); }
  std::size_t size() const { return keys_.size(); }
  std::size_t capacity() const { return weight_.size(); }
  std::span<const VertexId> labels() const { return keys_; }
  double weight(VertexId label) const { return weight_[label]; }

 private:
  std::vector<double> weight_;
  std::vector<VertexId> keys_;
};

/**
 * Picks a maximum-weight label from a non-empty tally.
 *
 * strict: the first label in insertion (scan) order that attains the maximum.
 * non-strict: uniform among all labels tied at the maximum; rng is only
 * advanced when there is more than one.
 */
VertexId choose_max_label(const LabelTally& tally, bool strict, XorShift32& rng);

}  // namespace lpcd
