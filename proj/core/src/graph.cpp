#include "lpcd/graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace lpcd {

Graph Graph::from_arcs(std::size_t vertex_count, std::vector<Arc> arcs) {
  for (const Arc& a : arcs) {
    LPCD_EXPECTS(a.source < vertex_count && a.target < vertex_count,
                 "arc endpoint out of range");
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
    return x.source != y.source ? x.source < y.source : x.target < y.target;
  });

  Graph g;
  g.offsets_.assign(vertex_count + 1, 0);
  g.targets_.reserve(arcs.size());
  g.weights_.reserve(arcs.size());
  for (std::size_t i = 0; i < arcs.size();) {
    const Arc& a = arcs[i];
    double w = 0.0;
    std::size_t j = i;
    for (; j < arcs.size() && arcs[j].source == a.source &&
           arcs[j].target == a.target;
         ++j) {
      w += arcs[j].weight;
    }
    g.targets_.push_back(a.target);
    g.weights_.push_back(w);
    ++g.offsets_[a.source + 1];
    g.total_weight_ += a.source == a.target ? 2 * w : w;
    i = j;
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    g.offsets_[v + 1] += g.offsets_[v];
  }
  return g;
}

std::size_t Graph::self_loop_count() const {
  std::size_t count = 0;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    auto nbrs = neighbors(v);
    count += std::binary_search(nbrs.begin(), nbrs.end(), v);
  }
  return count;
}

bool Graph::is_symmetric() const {
  for (VertexId u = 0; u < vertex_count(); ++u) {
    auto nbrs = neighbors(u);
    auto ws = neighbor_weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      VertexId v = nbrs[i];
      if (v == u) continue;
      auto back = neighbors(v);
      auto it = std::lower_bound(back.begin(), back.end(), u);
      if (it == back.end() || *it != u) return false;
      if (neighbor_weights(v)[it - back.begin()] != ws[i]) return false;
    }
  }
  return true;
}

std::vector<Arc> Graph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count());
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (ArcIndex i = offsets_[u]; i < offsets_[u + 1]; ++i) {
      out.push_back({u, targets_[i], weights_[i]});
    }
  }
  return out;
}

Graph preprocess(const Graph& graph, const PreprocessOptions& options) {
  const std::size_t n = graph.vertex_count();
  std::vector<Arc> arcs;
  arcs.reserve(2 * graph.arc_count() + n);
  for (const Arc& a : graph.arcs()) {
    if (a.source == a.target) {
      if (!options.self_loops) {
        arcs.push_back({a.source, a.target,
                        options.unit_weights ? 1.0 : a.weight});
      }
      continue;
    }
    const double w = options.unit_weights ? 1.0 : a.weight;
    arcs.push_back({a.source, a.target, w});
    arcs.push_back({a.target, a.source, w});
  }
  if (options.self_loops) {
    for (VertexId v = 0; v < n; ++v) arcs.push_back({v, v, 1.0});
  }

  // Both directions may now appear twice; collapse to the maximum weight.
  std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
    if (x.source != y.source) return x.source < y.source;
    if (x.target != y.target) return x.target < y.target;
    return x.weight > y.weight;
  });
  auto last = std::unique(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
    return x.source == y.source && x.target == y.target;
  });
  arcs.erase(last, arcs.end());
  return Graph::from_arcs(n, std::move(arcs));
}

double degree_weight(const Graph& graph, VertexId v) {
  LPCD_EXPECTS(v < graph.vertex_count(), "vertex out of range");
  auto nbrs = graph.neighbors(v);
  auto ws = graph.neighbor_weights(v);
  double d = 0.0;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    d += nbrs[i] == v ? 2 * ws[i] : ws[i];
  }
  return d;
}

std::size_t CommunityAssignment::community_count() const {
  return std::unordered_set<VertexId>(labels.begin(), labels.end()).size();
}

}  // namespace lpcd
