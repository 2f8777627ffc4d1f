#include "swp/mc.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace swp {

McEstimate run_mc(std::uint64_t n_samples, std::uint64_t seed,
                  const std::function<double(RngStream&)>& f,
                  int n_streams, int n_threads, std::uint64_t stream_offset) {
  if (n_samples == 0) throw std::invalid_argument("run_mc: n_samples must be > 0");
  if (n_streams < 1) throw std::invalid_argument("run_mc: n_streams must be >= 1");
  if (n_threads <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    n_threads = hw > 0 ? static_cast<int>(hw) : 1;
  }

  struct StreamAccum {
    double sum = 0.0;
    double sum_sq = 0.0;
  };
  std::vector<StreamAccum> acc(n_streams);

  const std::uint64_t base = n_samples / n_streams;
  const std::uint64_t rem = n_samples % n_streams;

  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      int s = next.fetch_add(1);
      if (s >= n_streams) return;
      std::uint64_t m = base + (static_cast<std::uint64_t>(s) < rem ? 1 : 0);
      RngStream rng(seed, stream_offset + static_cast<std::uint64_t>(s));
      double sum = 0.0, sum_sq = 0.0;
      for (std::uint64_t i = 0; i < m; ++i) {
        double v = f(rng);
        sum += v;
        sum_sq += v * v;
      }
      acc[s].sum = sum;
      acc[s].sum_sq = sum_sq;
    }
  };

  int nt = std::min<int>(n_threads, n_streams);
  if (nt <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int i = 0; i < nt; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Fixed merge order keeps the reduction deterministic.
  double sum = 0.0, sum_sq = 0.0;
  for (const auto& a : acc) {
    sum += a.sum;
    sum_sq += a.sum_sq;
  }

  const double n = static_cast<double>(n_samples);
  McEstimate est;
  est.mean = sum / n;
  double var = std::max(0.0, sum_sq / n - est.mean * est.mean);
  est.std_error = n_samples > 1 ? std::sqrt(var / (n - 1.0)) : 0.0;
  est.n_samples = n_samples;
  est.seed = seed;
  return est;
}

}  // namespace swp
