#include "lpcd/testkit.hpp"

#include <cmath>
#include <random>
#include <unordered_map>
#include <vector>

namespace lpcd::testkit {

namespace {

void add_edge(std::vector<Arc>& arcs, std::size_t u, std::size_t v) {
  arcs.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), 1.0});
  arcs.push_back({static_cast<VertexId>(v), static_cast<VertexId>(u), 1.0});
}

void add_clique(std::vector<Arc>& arcs, std::size_t first, std::size_t size) {
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) add_edge(arcs, first + i, first + j);
  }
}

// Batagelj-Brandes skipping over the upper triangle, O(n + m).
void add_gnp(std::vector<Arc>& arcs, std::size_t n, double p, std::uint64_t seed) {
  if (n < 2 || p <= 0.0) return;
  if (p >= 1.0) {
    add_clique(arcs, 0, n);
    return;
  }
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double log_q = std::log1p(-p);
  std::int64_t v = 1, w = -1;
  const auto count = static_cast<std::int64_t>(n);
  while (v < count) {
    const double r = unit(gen);
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < count) {
      w -= v;
      ++v;
    }
    if (v < count) add_edge(arcs, static_cast<std::size_t>(v), static_cast<std::size_t>(w));
  }
}

}  // namespace

Graph gen_raw_graph(const SyntheticGraphSpec& spec) {
  LPCD_EXPECTS(spec.probability >= 0.0 && spec.probability <= 1.0,
               "gnp probability must be in [0, 1]");
  std::vector<Arc> arcs;
  std::size_t n = 0;
  switch (spec.kind) {
    case GraphKind::kDisjointCliques:
    case GraphKind::kRingOfCliques:
      n = spec.cliques * spec.size;
      for (std::size_t c = 0; c < spec.cliques; ++c) add_clique(arcs, c * spec.size, spec.size);
      if (spec.kind == GraphKind::kRingOfCliques && spec.cliques >= 2 && spec.size >= 1) {
        // Bridges join the last vertices of consecutive cliques. Attaching to
        // a clique's first vertex instead puts the foreign label first in its
        // scan order, and strict first-maximum tie-breaking then floods the
        // ring in one sweep.
        const std::size_t bridges = spec.cliques == 2 ? 1 : spec.cliques;
        for (std::size_t c = 0; c < bridges; ++c) {
          const std::size_t next = (c + 1) % spec.cliques;
          add_edge(arcs, c * spec.size + spec.size - 1, next * spec.size + spec.size - 1);
        }
      }
      break;
    case GraphKind::kRandomGnp:
      n = spec.size;
      add_gnp(arcs, n, spec.probability, spec.seed);
      break;
    case GraphKind::kStar:
      n = spec.size + 1;
      for (std::size_t leaf = 1; leaf < n; ++leaf) add_edge(arcs, 0, leaf);
      break;
    case GraphKind::kPath:
      n = spec.size;
      for (std::size_t v = 1; v < n; ++v) add_edge(arcs, v - 1, v);
      break;
  }
  return Graph::from_arcs(n, std::move(arcs));
}

Graph gen_graph(const SyntheticGraphSpec& spec) {
  return preprocess(gen_raw_graph(spec));
}

double brute_modularity(const Graph& graph, const CommunityAssignment& assignment) {
  const std::size_t n = graph.vertex_count();
  LPCD_EXPECTS(n <= 256, "brute_modularity is limited to 256 vertices");
  LPCD_EXPECTS(assignment.size() == n, "assignment length != vertex count");

  std::vector<double> adj(n * n, 0.0);
  for (const Arc& a : graph.arcs()) {
    adj[a.source * n + a.target] += a.source == a.target ? 2 * a.weight : a.weight;
  }
  std::vector<double> degree(n, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) degree[i] += adj[i * n + j];
    total += degree[i];
  }
  if (total == 0.0) return 0.0;

  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (assignment[i] != assignment[j]) continue;
      sum += adj[i * n + j] - degree[i] * degree[j] / total;
    }
  }
  return sum / total;
}

CommunityAssignment clique_partition(const SyntheticGraphSpec& spec) {
  CommunityAssignment a;
  for (std::size_t v = 0; v < spec.cliques * spec.size; ++v) {
    a.labels.push_back(static_cast<VertexId>(v / spec.size * spec.size));
  }
  return a;
}

bool same_partition(const CommunityAssignment& a, const CommunityAssignment& b) {
  if (a.size() != b.size()) return false;
  std::unordered_map<VertexId, VertexId> forward, backward;
  for (std::size_t v = 0; v < a.size(); ++v) {
    auto [f, fi] = forward.try_emplace(a[v], b[v]);
    auto [r, ri] = backward.try_emplace(b[v], a[v]);
    if (f->second != b[v] || r->second != a[v]) return false;
  }
  return true;
}

}  // namespace lpcd::testkit
