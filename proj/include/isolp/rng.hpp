#pragma once

#include <cstdint>

namespace isolp {

// Counter-based generator. Draw number c of a stream keyed by `key` is
// splitmix64_mix(mix(key) + (c + 1) * 0x9E3779B97F4A7C15), i.e. the SplitMix64
// sequence indexed by position. Distributions are implemented here rather
// than through <random> so that streams are identical across standard
// libraries.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key);

  std::uint64_t next_u64();
  // Uniform on [0, 1) with 53 random bits.
  double uniform01();
  // Uniform integer on [0, bound); bound > 0. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound);
  // Standard normal via Box-Muller (cosine branch only, one draw per call pair).
  double normal();
  bool bernoulli(double p) { return uniform01() < p; }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64_mix(std::uint64_t z);

// Independent sub-seed for (stream, index) under a user seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

}  // namespace isolp
