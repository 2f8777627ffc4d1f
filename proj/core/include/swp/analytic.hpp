#pragma once

#include <complex>
#include <stdexcept>

#include "swp/config.hpp"
#include "swp/phase_shift.hpp"

namespace swp {

// Thrown when |epsilon|^2 exceeds the perturbative cutoff and the
// second-order purity expansion can no longer be trusted.
class PerturbativeRegimeViolation : public std::runtime_error {
 public:
  PerturbativeRegimeViolation(double epsilon_sq, double threshold);
  double epsilon_sq;
  double threshold;
};

// Cutoff on |epsilon|^2 above which purity() refuses to apply the expansion.
inline constexpr double kPerturbativeEpsSqMax = 0.1;

// Evaluator of the closed-form s-wave scattered relative amplitude
// eps*eta(k, t). Isotropic in k; time dependence is a pure phase.
struct ScatteredWave {
  CollisionConfig cfg;
  PhaseShiftModel model;
  std::complex<double> prefactor;  // sigma0^2 / (4 k0 - 2 i sigma0^2 r0)

  ScatteredWave(const CollisionConfig& cfg_, PhaseShiftModel model_);
};

std::complex<double> scattered_amplitude(double k, double t, const ScatteredWave& wave);

// Norm of the scattered wave, |epsilon|^2, from the closed form with
// (theta, theta', theta'') evaluated at k0. Bounded by
// 2 sigma0^2 / (k0^2 gamma^2).
double epsilon_sq(const CollisionConfig& cfg, const PhaseShiftModel& model);

enum class PurityMethod { expansion_eq16, narrow_eq18, oracle };

const char* to_string(PurityMethod m);

struct PurityDiagnostics {
  double sigma0_over_k0;
  double sigma0_theta_prime;
  double sigma0_sq_theta_double_prime;
  double gamma_sq;
};

struct PurityReport {
  double purity;
  double one_minus_purity;
  double epsilon_sq;
  PurityDiagnostics diagnostics;
  PurityMethod method;
};

// P = 1 - 2 |epsilon|^2. Throws PerturbativeRegimeViolation when |epsilon|^2
// exceeds kPerturbativeEpsSqMax.
PurityReport purity(const CollisionConfig& cfg, const PhaseShiftModel& model);

// Narrow-packet limit: 1 - P = sigma_c^2 S0(k0) / pi.
PurityReport purity_narrow(const CollisionConfig& cfg, const PhaseShiftModel& model);

// Second-order purity expansion with the interference integrals kept:
// P = 1 - 2 |epsilon|^2 (1 + I1 - I2 - I3).
double purity_from_expansion(double epsilon_sq, double I1, double I2, double I3);

}  // namespace swp
