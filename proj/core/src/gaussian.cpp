#include "swp/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swp {

namespace {
constexpr std::complex<double> kImag{0.0, 1.0};
}

double gaussian_gamma(const Vec3& a, const Vec3& b, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("gaussian_gamma: c must be > 0");
  const double c2 = c * c;
  const double d2 = (a - b).squaredNorm();
  return std::pow(c2 / (2.0 * std::numbers::pi), 0.75) * std::exp(-0.25 * c2 * d2);
}

double gaussian_gamma_radial(double a, double b, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("gaussian_gamma_radial: c must be > 0");
  const double c2 = c * c;
  const double d = a - b;
  return std::pow(c2 / (2.0 * std::numbers::pi), 0.75) * std::exp(-0.25 * c2 * d * d);
}

CmRel cm_rel(const Vec3& k1, const Vec3& k2) {
  return {k1 + k2, 0.5 * (k1 - k2)};
}

std::pair<Vec3, Vec3> rel_cm(const Vec3& K, const Vec3& k) {
  return {0.5 * K + k, 0.5 * K - k};
}

std::complex<double> initial_amplitude(const Vec3& k1, const Vec3& k2,
                                       const CollisionConfig& cfg,
                                       const BeamGeometry& geom) {
  const double c = std::numbers::sqrt2 / cfg.sigma0;
  const Vec3 kc = cfg.k0 * geom.axis;
  const Vec3 half_r0 = 0.5 * cfg.r0 * geom.axis;
  const double mod = gaussian_gamma(k1, kc, c) * gaussian_gamma(k2, -kc, c);
  const double phase = -(k1 - kc).dot(half_r0) + (k2 + kc).dot(half_r0);
  return mod * std::exp(kImag * phase);
}

}  // namespace swp
