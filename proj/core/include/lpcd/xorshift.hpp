#pragma once

#include <cstdint>

#include "lpcd/graph.hpp"

namespace lpcd {

/**
 * Marsaglia xorshift32 (shift triple 13, 17, 5). Period 2^32 - 1 over the
 * nonzero states. A zero seed would be a fixed point, so it is replaced by
 * kZeroSeedReplacement.
 */
class XorShift32 {
 public:
  static constexpr std::uint32_t kZeroSeedReplacement = 2463534242u;

  constexpr explicit XorShift32(std::uint32_t seed = 1)
      : state_(seed ? seed : kZeroSeedReplacement) {}

  constexpr std::uint32_t next() {
    std::uint32_t x = state_;
    x ^= x << 13;
    x ^= x >> 17;
    x ^= x << 5;
    state_ = x;
    return x;
  }

  /// Uniform-ish draw in [0, n) by plain modulo reduction of next().
  /// The bias is at most n / 2^32; the reduction is fixed so that runs are
  /// reproducible across implementations.
  std::uint32_t next_bounded(std::uint32_t n) {
    LPCD_EXPECTS(n >= 1, "next_bounded requires n >= 1");
    return next() % n;
  }

  constexpr std::uint32_t state() const { return state_; }

 private:
  std::uint32_t state_;
};

/// Seed for worker k's private stream: a murmur3-style finaliser over
/// (seed, k). Never returns 0.
constexpr std::uint32_t worker_seed(std::uint32_t seed, std::uint32_t worker) {
  std::uint32_t h = seed ^ (worker * 0x9E3779B9u);
  h ^= h >> 16;
  h *= 0x85EBCA6Bu;
  h ^= h >> 13;
  h *= 0xC2B2AE35u;
  h ^= h >> 16;
  return h ? h : XorShift32::kZeroSeedReplacement;
}

}  // namespace lpcd
