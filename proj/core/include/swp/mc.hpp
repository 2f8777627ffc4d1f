#pragma once

#include <cstdint>
#include <functional>

#include "swp/rng.hpp"

namespace swp {

// Monte Carlo estimate of a mean with its standard error.
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
};

// Averages f over n_samples draws, split across a fixed number of
// deterministic RNG streams. Per-stream partial sums are merged in stream
// order, so the result is bit-identical for any thread count.
//
// stream_offset shifts the stream indices, letting independent estimators
// share one seed without sharing randomness.
McEstimate run_mc(std::uint64_t n_samples, std::uint64_t seed,
                  const std::function<double(RngStream&)>& f,
                  int n_streams = 64, int n_threads = 0,
                  std::uint64_t stream_offset = 0);

}  // namespace swp
