#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace swp {

enum class ValidationSuite { quick, full };

struct ValidationCheck {
  std::string name;
  double measured = 0.0;
  double target = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

struct ValidationParams {
  double sigma0 = 0.01;
  double k0 = 1.0;
  double r0 = 10.0;
  double hard_sphere_b = 1.0;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 42;
  int quad_n = 200;
  int threads = 0;
};

// Runs the oracle comparisons against the closed-form results. Deterministic
// for fixed params; output independent of thread count.
std::vector<ValidationCheck> run_validation(ValidationSuite suite,
                                            const ValidationParams& params = {});

// Least-squares slope of log(y) vs log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace swp
