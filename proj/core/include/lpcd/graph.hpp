#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpcd {

using VertexId = std::uint32_t;
using ArcIndex = std::uint64_t;

/// Thrown when a caller breaks a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define LPCD_EXPECTS(cond, msg)                                     \
  do {                                                              \
    if (!(cond)) throw ::lpcd::ContractViolation(std::string(msg)); \
  } while (0)

/// One stored arc of a graph. Used for construction only.
struct Arc {
  VertexId source;
  VertexId target;
  double weight;
};

/**
 * Immutable weighted graph in compressed sparse row form.
 *
 * Every vertex's adjacency is sorted by target id with duplicates merged, so
 * the "scan order" of a neighborhood is ascending neighbor id. An undirected
 * edge {u,v} is stored as the two arcs (u,v) and (v,u); a self-loop is stored
 * once. total_weight() is the modularity normaliser 2m: the sum of all arc
 * weights with each self-loop counted twice.
 */
class Graph {
 public:
  Graph() : offsets_{0} {}

  /// Builds from arcs; duplicate (source,target) pairs have weights summed.
  static Graph from_arcs(std::size_t vertex_count, std::vector<Arc> arcs);

  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::size_t arc_count() const { return targets_.size(); }
  double total_weight() const { return total_weight_; }

  std::span<const ArcIndex> offsets() const { return offsets_; }
  std::span<const VertexId> targets() const { return targets_; }
  std::span<const double> weights() const { return weights_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::span<const double> neighbor_weights(VertexId v) const {
    return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  std::size_t self_loop_count() const;

  /// True when every non-loop arc (u,v,w) has a twin (v,u,w).
  bool is_symmetric() const;

  std::vector<Arc> arcs() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<ArcIndex> offsets_;
  std::vector<VertexId> targets_;
  std::vector<double> weights_;
  double total_weight_ = 0.0;
};

struct PreprocessOptions {
  /// Force every arc weight to 1.
  bool unit_weights = true;
  /// Give every vertex exactly one self-loop of weight 1, replacing any
  /// existing one. When off, existing self-loops are kept as loaded.
  bool self_loops = true;
};

/**
 * Makes a loaded graph undirected and normalises it for label propagation.
 *
 * A one-directional arc (u,v,w) gains its reverse. When both directions exist
 * with different weights the larger weight is used for both, which keeps the
 * operation idempotent.
 */
Graph preprocess(const Graph& graph, const PreprocessOptions& options = {});

/// Weighted degree of v; a self-loop counts twice.
double degree_weight(const Graph& graph, VertexId v);

/// Per-vertex community id; ids are vertex ids in [0, vertex_count).
struct CommunityAssignment {
  std::vector<VertexId> labels;

  std::size_t size() const { return labels.size(); }
  VertexId operator[](std::size_t v) const { return labels[v]; }
  std::size_t community_count() const;

  friend bool operator==(const CommunityAssignment&,
                         const CommunityAssignment&) = default;
};

}  // namespace lpcd
