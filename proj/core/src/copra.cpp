#include "lpcd/copra.hpp"

#include <algorithm>

#include "lpcd/quality.hpp"
#include "worker.hpp"

namespace lpcd {

namespace {

// Shares within this distance below 1 / max_labels still qualify, so exact
// fractions such as 1/4 survive rounding in the normalisation.
constexpr double kThresholdSlack = 1e-12;

void threshold_into(const LabelTally& tally, int max_labels, XorShift32& rng,
                    std::vector<LabelBelonging>& out) {
  out.clear();
  if (tally.empty()) return;

  double total = 0.0;
  double top = 0.0;
  for (VertexId c : tally.labels()) {
    const double w = tally.weight(c);
    total += w;
    top = std::max(top, w);
  }
  const double threshold = 1.0 / max_labels - kThresholdSlack;
  double kept = 0.0;
  for (VertexId c : tally.labels()) {
    const double share = tally.weight(c) / total;
    if (share >= threshold) {
      out.push_back({c, share});
      kept += share;
    }
  }

  if (out.empty()) {
    std::uint32_t ties = 0;
    for (VertexId c : tally.labels()) ties += tally.weight(c) == top;
    std::uint32_t pick = rng.next_bounded(ties);
    for (VertexId c : tally.labels()) {
      if (tally.weight(c) == top && pick-- == 0) {
        out.push_back({c, 1.0});
        break;
      }
    }
    return;
  }

  for (LabelBelonging& e : out) e.belonging /= kept;
  std::sort(out.begin(), out.end(),
            [](const LabelBelonging& a, const LabelBelonging& b) {
              return a.label < b.label;
            });
}

}  // namespace

void validate(const CopraParams& params) {
  LPCD_EXPECTS(params.tolerance > 0.0 && params.tolerance <= 1.0,
               "tolerance must be in (0, 1]");
  LPCD_EXPECTS(params.max_labels >= 1, "max_labels must be >= 1");
  LPCD_EXPECTS(params.max_iterations >= 1, "max_iterations must be >= 1");
  LPCD_EXPECTS(params.workers >= 1, "workers must be >= 1");
}

VertexId best_label(std::span<const LabelBelonging> entries) {
  LPCD_EXPECTS(!entries.empty(), "best_label of an empty set");
  const LabelBelonging* best = &entries[0];
  for (const LabelBelonging& e : entries) {
    if (e.belonging > best->belonging ||
        (e.belonging == best->belonging && e.label < best->label)) {
      best = &e;
    }
  }
  return best->label;
}

VertexLabelSet collect_and_threshold(const LabelTally& tally, int max_labels,
                                     XorShift32& rng) {
  LPCD_EXPECTS(max_labels >= 1, "max_labels must be >= 1");
  VertexLabelSet set;
  threshold_into(tally, max_labels, rng, set.entries);
  if (!set.entries.empty()) set.best = best_label(set.entries);
  return set;
}

CopraState::CopraState(const Graph& graph, int max_labels)
    : graph_(&graph),
      max_labels_(max_labels),
      entries_(2 * graph.vertex_count() * static_cast<std::size_t>(max_labels)),
      counts_(2 * graph.vertex_count(), 0),
      active_(new std::atomic<std::uint8_t>[graph.vertex_count()]),
      best_(graph.vertex_count()) {
  LPCD_EXPECTS(max_labels >= 1, "max_labels must be >= 1");
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    *slot_data(v, 0) = {v, 1.0};
    counts_[2 * v] = 1;
    active_[v].store(0, std::memory_order_relaxed);
    best_[v] = v;
  }
}

std::span<const LabelBelonging> CopraState::labels_of(VertexId v) const {
  const unsigned slot = active_[v].load(std::memory_order_acquire);
  return {slot_data(v, slot), counts_[2 * v + slot]};
}

VertexLabelSet CopraState::snapshot(VertexId v) const {
  auto entries = labels_of(v);
  return {{entries.begin(), entries.end()}, best_[v]};
}

bool CopraState::update(VertexId v, LabelTally& tally, XorShift32& rng) {
  thread_local std::vector<LabelBelonging> next;

  tally.clear();
  auto nbrs = graph_->neighbors(v);
  auto ws = graph_->neighbor_weights(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    if (nbrs[i] == v) continue;
    for (const LabelBelonging& e : labels_of(nbrs[i])) {
      tally.add(e.label, e.belonging * ws[i]);
    }
  }
  threshold_into(tally, max_labels_, rng, next);
  if (next.empty()) next.push_back({v, 1.0});

  const unsigned slot = 1u - active_[v].load(std::memory_order_relaxed);
  std::copy(next.begin(), next.end(), slot_data(v, slot));
  counts_[2 * v + slot] = static_cast<std::uint32_t>(next.size());
  active_[v].store(static_cast<std::uint8_t>(slot), std::memory_order_release);

  const VertexId best = best_label(next);
  if (best == best_[v]) return false;
  best_[v] = best;
  return true;
}

DetectionResult copra_detect(const Graph& graph, const CopraParams& params,
                             const IterationObserver& observer) {
  validate(params);
  detail::check_detector_input(graph);

  const std::size_t n = graph.vertex_count();
  DetectionResult result;
  CopraState state(graph, params.max_labels);
  auto workers = detail::make_workers(n, params.workers, params.seed);

  const auto start = std::chrono::steady_clock::now();
  while (n > 0 && result.iterations < params.max_iterations) {
    const std::size_t changed = detail::count_over_vertices(
        n, workers, [&](detail::Worker& w, VertexId v) {
          return state.update(v, w.tally, w.rng);
        });
    ++result.iterations;
    if (observer) observer(result.iterations, changed, state.best_labels());
    if (static_cast<double>(changed) / static_cast<double>(n) <= params.tolerance) {
      break;
    }
  }
  result.elapsed = std::chrono::steady_clock::now() - start;

  auto best = state.best_labels();
  result.assignment.labels.assign(best.begin(), best.end());
  result.modularity = modularity(graph, result.assignment);
  return result;
}

}  // namespace lpcd
