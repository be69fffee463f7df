#pragma once

#include <cstddef>
#include <cstdint>

#include "lpcd/graph.hpp"

namespace lpcd::testkit {

enum class GraphKind { kDisjointCliques, kRingOfCliques, kRandomGnp, kStar, kPath };

struct SyntheticGraphSpec {
  GraphKind kind = GraphKind::kDisjointCliques;
  /// Number of cliques (clique kinds).
  std::size_t cliques = 2;
  /// Vertices per clique (clique kinds), leaves (star), vertices (gnp, path).
  std::size_t size = 3;
  /// Edge probability (gnp).
  double probability = 0.0;
  std::uint64_t seed = 1;
};

/// Unweighted generated graph before preprocessing (no self-loops).
Graph gen_raw_graph(const SyntheticGraphSpec& spec);

/// gen_raw_graph followed by default preprocessing. Deterministic per seed.
Graph gen_graph(const SyntheticGraphSpec& spec);

inline SyntheticGraphSpec disjoint_cliques(std::size_t k, std::size_t size) {
  return {GraphKind::kDisjointCliques, k, size, 0.0, 1};
}
/// k cliques; the last vertex of clique i is bridged to the last vertex of
/// clique (i + 1) mod k (a single bridge when k = 2).
inline SyntheticGraphSpec ring_of_cliques(std::size_t k, std::size_t size) {
  return {GraphKind::kRingOfCliques, k, size, 0.0, 1};
}
inline SyntheticGraphSpec gnp(std::size_t n, double p, std::uint64_t seed) {
  return {GraphKind::kRandomGnp, 0, n, p, seed};
}
/// Hub 0 joined to leaves 1..leaves.
inline SyntheticGraphSpec star(std::size_t leaves) {
  return {GraphKind::kStar, 0, leaves, 0.0, 1};
}
inline SyntheticGraphSpec path(std::size_t n) {
  return {GraphKind::kPath, 0, n, 0.0, 1};
}

/**
 * Reference modularity by direct O(|V|^2) evaluation over a dense adjacency
 * matrix: Q = (1/W) sum_ij [A_ij - d_i d_j / W] [c_i == c_j], with a
 * self-loop of weight w entering A_ii as 2w. Guarded to |V| <= 256.
 */
double brute_modularity(const Graph& graph, const CommunityAssignment& assignment);

/// Ground-truth labels for clique kinds: vertex v belongs to clique v / size.
CommunityAssignment clique_partition(const SyntheticGraphSpec& spec);

/// True when a and b induce the same partition (up to relabeling).
bool same_partition(const CommunityAssignment& a, const CommunityAssignment& b);

}  // namespace lpcd::testkit
