#include "swp/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "swp/gaussian.hpp"
#include "swp/quadrature.hpp"

namespace swp {

namespace {

constexpr std::complex<double> kImag{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

std::complex<double> amp_or_zero(double k, const ScatteredWave& wave) {
  if (k <= 0.0) return {0.0, 0.0};
  return scattered_amplitude(k, 0.0, wave);
}

}  // namespace

double epsilon_sq_quadrature(const CollisionConfig& cfg, const PhaseShiftModel& model,
                             int n_nodes) {
  const ScatteredWave wave(cfg, model);
  const double lo = std::max(1e-8 * cfg.k0, cfg.k0 - 12.0 * cfg.sigma0);
  const double hi = cfg.k0 + 12.0 * cfg.sigma0;
  const auto rule = gauss_legendre(n_nodes).mapped(lo, hi);
  double sum = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double k = rule.nodes[i];
    sum += rule.weights[i] * k * k * std::norm(scattered_amplitude(k, 0.0, wave));
  }
  return 4.0 * kPi * sum;
}

double overlap_I1(const CollisionConfig& cfg, const PhaseShiftModel& model,
                  int n_nodes) {
  const double eps2 = epsilon_sq_quadrature(cfg, model, n_nodes);
  if (eps2 <= 0.0) return 0.0;
  const double eps = std::sqrt(eps2);
  const ScatteredWave wave(cfg, model);

  const double s0 = cfg.sigma0, k0 = cfg.k0, r0 = cfg.r0;
  const double s2 = s0 * s0;
  const double gamma_peak = std::pow(2.0 / (kPi * s2), 0.75);

  const double lo = std::max(1e-8 * k0, k0 - 12.0 * s0);
  const double hi = k0 + 12.0 * s0;
  const auto k_rule = gauss_legendre(n_nodes).mapped(lo, hi);
  const auto& v_base = gauss_legendre(n_nodes);

  std::complex<double> overlap{0.0, 0.0};
  for (size_t i = 0; i < k_rule.nodes.size(); ++i) {
    const double k = k_rule.nodes[i];
    // Angular integral in v = (2 k k0 / sigma0^2)(1 - cos theta); the packet
    // gaussian becomes e^{-v} with support of a few units.
    const double v_hi = std::min(40.0, 4.0 * k * k0 / s2);
    const auto v_rule = v_base.mapped(0.0, v_hi);
    std::complex<double> ang{0.0, 0.0};
    for (size_t j = 0; j < v_rule.nodes.size(); ++j) {
      const double v = v_rule.nodes[j];
      const double u = 1.0 - s2 * v / (2.0 * k * k0);
      ang += v_rule.weights[j] * std::exp(-v) * std::exp(-kImag * ((k * u - k0) * r0));
    }
    const double dk = k - k0;
    const double radial = gamma_peak * std::exp(-dk * dk / s2);
    const double jac = 2.0 * kPi * s2 / (2.0 * k * k0);
    const std::complex<double> eta_conj = std::conj(scattered_amplitude(k, 0.0, wave)) / eps;
    overlap += k_rule.weights[i] * k * k * eta_conj * radial * jac * ang;
  }
  return std::norm(overlap);
}

std::pair<McEstimate, McEstimate> mc_overlap_I2_I3(const CollisionConfig& cfg,
                                                   const PhaseShiftModel& model,
                                                   std::uint64_t n_samples,
                                                   std::uint64_t seed, int n_threads) {
  if (n_samples < 100000)
    throw std::invalid_argument("mc_overlap_I2_I3: n_samples must be >= 1e5");

  const double eps2 = epsilon_sq_quadrature(cfg, model);
  if (eps2 <= 0.0) {
    McEstimate zero{0.0, 0.0, n_samples, seed};
    return {zero, zero};
  }
  const double eps = std::sqrt(eps2);
  const ScatteredWave wave(cfg, model);

  const double s0 = cfg.sigma0, k0 = cfg.k0, r0 = cfg.r0;
  const double s2 = s0 * s0;
  const Vec3 kc(0.0, 0.0, k0);

  // Normalized scattered two-particle amplitude.
  auto phi_scat = [&](const Vec3& ka, const Vec3& kb) -> std::complex<double> {
    const Vec3 K = ka + kb;
    const double krel = 0.5 * (ka - kb).norm();
    return gaussian_gamma(K, Vec3::Zero(), 1.0 / s0) * amp_or_zero(krel, wave) / eps;
  };
  auto phi1 = [&](const Vec3& k) -> std::complex<double> {
    return gaussian_gamma(k, kc, std::numbers::sqrt2 / s0) *
           std::exp(-kImag * ((k - kc).dot(Vec3(0, 0, 0.5 * r0))));
  };
  auto phi2 = [&](const Vec3& k) -> std::complex<double> {
    return gaussian_gamma(k, -kc, std::numbers::sqrt2 / s0) *
           std::exp(kImag * ((k + kc).dot(Vec3(0, 0, 0.5 * r0))));
  };

  // Gaussian proposal densities: packets have per-component variance
  // sigma0^2/2 about their centers; the conditional k-proposal matches the
  // product of the two center-of-mass gaussians.
  const double packet_norm = std::pow(1.0 / (kPi * s2), 1.5);
  auto packet_pdf = [&](const Vec3& k, const Vec3& center) {
    return packet_norm * std::exp(-(k - center).squaredNorm() / s2);
  };
  auto draw = [&](RngStream& rng, const Vec3& center) {
    const double sd = s0 / std::numbers::sqrt2;
    return Vec3(center.x() + sd * rng.normal(), center.y() + sd * rng.normal(),
                center.z() + sd * rng.normal());
  };

  auto sample_i2 = [&](RngStream& rng) -> double {
    const Vec3 k1 = draw(rng, kc);
    const Vec3 k3 = draw(rng, kc);
    const Vec3 m = -0.5 * (k1 + k3);
    const Vec3 k2 = draw(rng, m);
    const std::complex<double> f = std::conj(phi_scat(k1, k2)) * phi1(k1) *
                                   phi_scat(k3, k2) * std::conj(phi1(k3));
    const double w = f.real() / (packet_pdf(k1, kc) * packet_pdf(k3, kc) *
                                 packet_pdf(k2, m));
    if (!std::isfinite(w))
      throw std::logic_error("mc_overlap_I2_I3: non-finite I2 integrand sample");
    return w;
  };

  auto sample_i3 = [&](RngStream& rng) -> double {
    const Vec3 k2 = draw(rng, -kc);
    const Vec3 k4 = draw(rng, -kc);
    const Vec3 m = -0.5 * (k2 + k4);
    const Vec3 k1 = draw(rng, m);
    const std::complex<double> f = std::conj(phi_scat(k1, k2)) * phi2(k2) *
                                   phi_scat(k1, k4) * std::conj(phi2(k4));
    const double w = f.real() / (packet_pdf(k2, -kc) * packet_pdf(k4, -kc) *
                                 packet_pdf(k1, m));
    if (!std::isfinite(w))
      throw std::logic_error("mc_overlap_I2_I3: non-finite I3 integrand sample");
    return w;
  };

  McEstimate i2 = run_mc(n_samples, seed, sample_i2, 64, n_threads, /*stream_offset=*/0);
  McEstimate i3 = run_mc(n_samples, seed, sample_i3, 64, n_threads, /*stream_offset=*/64);
  return {i2, i3};
}

}  // namespace swp
