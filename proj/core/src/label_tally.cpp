#include "lpcd/label_tally.hpp"

namespace lpcd {

VertexId choose_max_label(const LabelTally& tally, bool strict, XorShift32& rng) {
  LPCD_EXPECTS(!tally.empty(), "choose_max_label on empty tally");
  auto labels = tally.labels();
  VertexId best = labels[0];
  double best_w = tally.weight(best);
  std::uint32_t ties = 1;
  for (std::size_t i = 1; i < labels.size(); ++i) {
    const double w = tally.weight(labels[i]);
    if (w > best_w) {
      best = labels[i];
      best_w = w;
      ties = 1;
    } else if (w == best_w) {
      ++ties;
    }
  }
  if (strict || ties == 1) return best;

  std::uint32_t pick = rng.next_bounded(ties);
  for (VertexId label : labels) {
    if (tally.weight(label) == best_w && pick-- == 0) return label;
  }
  return best;  // unreachable
}

}  // namespace lpcd
