#include "lpcd/slpa.hpp"

#include <algorithm>

#include "lpcd/quality.hpp"
#include "worker.hpp"

namespace lpcd {

void validate(const SlpaParams& params) {
  LPCD_EXPECTS(params.memory_size >= 2, "memory_size must be >= 2");
  LPCD_EXPECTS(params.tolerance > 0.0 && params.tolerance <= 1.0,
               "tolerance must be in (0, 1]");
  LPCD_EXPECTS(params.workers >= 1, "workers must be >= 1");
}

VertexId most_popular_label(std::span<const VertexId> memory) {
  LPCD_EXPECTS(!memory.empty(), "most_popular_label of an empty memory");
  // Memories are short; sort a copy and scan runs.
  thread_local std::vector<VertexId> sorted;
  sorted.assign(memory.begin(), memory.end());
  std::sort(sorted.begin(), sorted.end());
  VertexId best = sorted[0];
  std::size_t best_run = 0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    if (j - i > best_run) {
      best = sorted[i];
      best_run = j - i;
    }
    i = j;
  }
  return best;
}

SlpaState::SlpaState(const Graph& graph, int memory_size)
    : graph_(&graph),
      memory_size_(memory_size),
      slots_(graph.vertex_count() * static_cast<std::size_t>(memory_size)),
      filled_(new std::atomic<std::uint32_t>[graph.vertex_count()]) {
  LPCD_EXPECTS(memory_size >= 2, "memory_size must be >= 2");
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    slots_[static_cast<std::size_t>(v) * memory_size_] = v;
    filled_[v].store(1, std::memory_order_relaxed);
  }
}

VertexId SlpaState::listen(VertexId v, bool strict, LabelTally& tally,
                           XorShift32& rng) {
  const std::uint32_t own_filled = filled_[v].load(std::memory_order_relaxed);
  LPCD_EXPECTS(own_filled < static_cast<std::uint32_t>(memory_size_),
               "label memory is full");

  tally.clear();
  auto nbrs = graph_->neighbors(v);
  auto ws = graph_->neighbor_weights(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    const VertexId u = nbrs[i];
    if (u == v) continue;
    const std::uint32_t f = filled(u);
    const VertexId spoken =
        slots_[static_cast<std::size_t>(u) * memory_size_ + rng.next_bounded(f)];
    tally.add(spoken, ws[i]);
  }

  VertexId heard;
  if (tally.empty()) {
    heard = most_popular_label(memory(v));
  } else {
    heard = choose_max_label(tally, strict, rng);
  }
  slots_[static_cast<std::size_t>(v) * memory_size_ + own_filled] = heard;
  filled_[v].store(own_filled + 1, std::memory_order_release);
  return heard;
}

CommunityAssignment SlpaState::project() const {
  CommunityAssignment out{std::vector<VertexId>(vertex_count())};
  for (VertexId v = 0; v < vertex_count(); ++v) {
    out.labels[v] = most_popular_label(memory(v));
  }
  return out;
}

int slpa_propagate(SlpaState& state, const SlpaParams& params,
                   const IterationObserver& observer) {
  validate(params);
  LPCD_EXPECTS(params.memory_size == state.memory_size(),
               "memory_size does not match the state");
  const std::size_t n = state.vertex_count();
  auto workers = detail::make_workers(n, params.workers, params.seed);
  std::vector<VertexId> heard(n);

  int rounds = 0;
  while (n > 0 && rounds < params.memory_size - 1) {
    const bool first = rounds == 0;
    // A vertex counts as changed when it recorded a different label than in
    // the previous round; every vertex counts as changed in the first round.
    const std::size_t changed = detail::count_over_vertices(
        n, workers, [&](detail::Worker& w, VertexId v) {
          const VertexId label = state.listen(v, params.strict, w.tally, w.rng);
          const bool differs = first || label != heard[v];
          heard[v] = label;
          return differs;
        });
    ++rounds;
    if (observer) observer(rounds, changed, heard);
    if (static_cast<double>(changed) / static_cast<double>(n) <= params.tolerance) {
      break;
    }
  }
  return rounds;
}

DetectionResult slpa_detect(const Graph& graph, const SlpaParams& params,
                            const IterationObserver& observer) {
  validate(params);
  detail::check_detector_input(graph);

  DetectionResult result;
  SlpaState state(graph, params.memory_size);
  const auto start = std::chrono::steady_clock::now();
  result.iterations = slpa_propagate(state, params, observer);
  result.elapsed = std::chrono::steady_clock::now() - start;

  result.assignment = state.project();
  result.modularity = modularity(graph, result.assignment);
  return result;
}

}  // namespace lpcd
