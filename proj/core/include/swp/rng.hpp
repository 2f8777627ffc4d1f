#pragma once

#include <cstdint>
#include <random>

namespace swp {

// Deterministic stream of random numbers. The sequence is a pure function of
// (seed, stream_index): identical across platforms, thread counts, and call
// interleavings. Distinct stream indices give statistically independent
// streams.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_index);

  std::uint64_t next_u64() { return eng_(); }

  // Uniform on [0, 1).
  double uniform();

  // Standard normal via Box-Muller (distribution code pinned here rather than
  // delegated to std::normal_distribution, whose sequence is
  // implementation-defined).
  double normal();

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// SplitMix64 step; used for seeding and key mixing.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace swp
