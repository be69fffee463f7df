#include "lpcd/quality.hpp"

#include <vector>

namespace lpcd {

double modularity(const Graph& graph, const CommunityAssignment& assignment) {
  const std::size_t n = graph.vertex_count();
  LPCD_EXPECTS(assignment.size() == n, "assignment length != vertex count");
  const double total = graph.total_weight();
  if (total <= 0.0) return 0.0;

  std::vector<double> internal(n, 0.0);
  std::vector<double> incident(n, 0.0);
  for (VertexId u = 0; u < n; ++u) {
    const VertexId cu = assignment[u];
    LPCD_EXPECTS(cu < n, "community label out of range");
    auto nbrs = graph.neighbors(u);
    auto ws = graph.neighbor_weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const VertexId v = nbrs[i];
      const double w = v == u ? 2 * ws[i] : ws[i];
      incident[cu] += w;
      if (assignment[v] == cu) internal[cu] += w;
    }
  }

  double q = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    if (incident[c] == 0.0) continue;
    const double share = incident[c] / total;
    q += internal[c] / total - share * share;
  }
  return q;
}

}  // namespace lpcd
