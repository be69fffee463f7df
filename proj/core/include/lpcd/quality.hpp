#pragma once

#include "lpcd/graph.hpp"

namespace lpcd {

/**
 * Newman-Girvan modularity at resolution 1:
 *
 *   Q = sum_c [ w_c / W - (d_c / W)^2 ]
 *
 * W is graph.total_weight(), w_c the weight of arcs with both ends in c
 * (self-loops counted twice), d_c the summed degree_weight of c's members.
 * Labels must lie in [0, vertex_count). Returns 0 for an edgeless graph.
 */
double modularity(const Graph& graph, const CommunityAssignment& assignment);

}  // namespace lpcd
