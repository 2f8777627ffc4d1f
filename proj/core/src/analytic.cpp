#include "swp/analytic.hpp"

#include <cmath>
#include <numbers>

#include "swp/gaussian.hpp"

namespace swp {

namespace {
constexpr std::complex<double> kImag{0.0, 1.0};
}

PerturbativeRegimeViolation::PerturbativeRegimeViolation(double eps_sq, double thr)
    : std::runtime_error("perturbative regime violated: |epsilon|^2 = " +
                         std::to_string(eps_sq) + " exceeds threshold " +
                         std::to_string(thr)),
      epsilon_sq(eps_sq),
      threshold(thr) {}

const char* to_string(PurityMethod m) {
  switch (m) {
    case PurityMethod::expansion_eq16: return "expansion_eq16";
    case PurityMethod::narrow_eq18: return "narrow_eq18";
    case PurityMethod::oracle: return "oracle";
  }
  return "unknown";
}

ScatteredWave::ScatteredWave(const CollisionConfig& cfg_, PhaseShiftModel model_)
    : cfg(cfg_), model(std::move(model_)) {
  const double s2 = cfg.sigma0 * cfg.sigma0;
  prefactor = s2 / std::complex<double>(4.0 * cfg.k0, -2.0 * s2 * cfg.r0);
}

std::complex<double> scattered_amplitude(double k, double t, const ScatteredWave& wave) {
  if (!(k > 0.0)) throw std::invalid_argument("scattered_amplitude: k must be > 0");
  const auto& cfg = wave.cfg;
  const double th = theta(wave.model, k);
  const std::complex<double> bracket = std::exp(2.0 * kImag * th) - 1.0;
  const double gamma_rad = gaussian_gamma_radial(k, cfg.k0, 2.0 / cfg.sigma0);
  const std::complex<double> phase =
      std::exp(kImag * ((k - cfg.k0) * cfg.r0 - 0.5 * k * k * t));
  return wave.prefactor * bracket * gamma_rad * phase / k;
}

double epsilon_sq(const CollisionConfig& cfg, const PhaseShiftModel& model) {
  const ThetaDerivs d = theta_derivs(model, cfg.k0);
  const double s2 = cfg.sigma0 * cfg.sigma0;
  const std::complex<double> z(2.0, -s2 * d.theta_double_prime);
  const std::complex<double> val = std::exp(2.0 * kImag * d.theta) *
                                   std::sqrt(2.0 / z) *
                                   std::exp(-s2 * d.theta_prime * d.theta_prime / z);
  const double gamma_sq = derived_scales(cfg).gamma_sq;
  // The bracket lies in [0, 2]; clamp the float-level underflow at 0.
  const double bracket = std::max(0.0, 1.0 - val.real());
  return s2 / (cfg.k0 * cfg.k0 * gamma_sq) * bracket;
}

namespace {

PurityDiagnostics make_diagnostics(const CollisionConfig& cfg,
                                   const PhaseShiftModel& model) {
  const ThetaDerivs d = theta_derivs(model, cfg.k0);
  PurityDiagnostics diag;
  diag.sigma0_over_k0 = cfg.sigma0_over_k0();
  diag.sigma0_theta_prime = cfg.sigma0 * d.theta_prime;
  diag.sigma0_sq_theta_double_prime = cfg.sigma0 * cfg.sigma0 * d.theta_double_prime;
  diag.gamma_sq = derived_scales(cfg).gamma_sq;
  return diag;
}

}  // namespace

PurityReport purity(const CollisionConfig& cfg, const PhaseShiftModel& model) {
  const double eps2 = epsilon_sq(cfg, model);
  if (eps2 > kPerturbativeEpsSqMax)
    throw PerturbativeRegimeViolation(eps2, kPerturbativeEpsSqMax);
  PurityReport rep;
  rep.one_minus_purity = 2.0 * eps2;
  rep.purity = 1.0 - rep.one_minus_purity;
  rep.epsilon_sq = eps2;
  rep.diagnostics = make_diagnostics(cfg, model);
  rep.method = PurityMethod::expansion_eq16;
  return rep;
}

PurityReport purity_narrow(const CollisionConfig& cfg, const PhaseShiftModel& model) {
  const DerivedScales ds = derived_scales(cfg);
  PurityReport rep;
  rep.one_minus_purity = ds.sigma_c * ds.sigma_c * cross_section(model, cfg.k0) /
                         std::numbers::pi;
  rep.purity = 1.0 - rep.one_minus_purity;
  rep.epsilon_sq = 0.5 * rep.one_minus_purity;
  rep.diagnostics = make_diagnostics(cfg, model);
  rep.method = PurityMethod::narrow_eq18;
  return rep;
}

double purity_from_expansion(double epsilon_sq, double I1, double I2, double I3) {
  if (!(epsilon_sq >= 0.0) || !(I1 >= 0.0) || !(I2 >= 0.0) || !(I3 >= 0.0))
    throw std::invalid_argument("purity_from_expansion: inputs must be >= 0");
  if (epsilon_sq > kPerturbativeEpsSqMax)
    throw PerturbativeRegimeViolation(epsilon_sq, kPerturbativeEpsSqMax);
  return 1.0 - 2.0 * epsilon_sq * (1.0 + I1 - I2 - I3);
}

}  // namespace swp
