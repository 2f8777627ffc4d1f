#include "swp/config.hpp"

#include <cmath>
#include <stdexcept>

namespace swp {

CollisionConfig::CollisionConfig(double sigma0_, double k0_, double r0_, double t_)
    : sigma0(sigma0_), k0(k0_), r0(r0_), t(t_) {
  if (!(sigma0 > 0.0)) throw std::invalid_argument("CollisionConfig: sigma0 must be > 0");
  if (!(k0 > 0.0)) throw std::invalid_argument("CollisionConfig: k0 must be > 0");
  if (!(r0 >= 0.0)) throw std::invalid_argument("CollisionConfig: r0 must be >= 0");
  if (!(t >= 0.0)) throw std::invalid_argument("CollisionConfig: t must be >= 0");
}

DerivedScales derived_scales(const CollisionConfig& cfg) {
  const double s = cfg.spreading_parameter();
  DerivedScales d;
  d.gamma_sq = 1.0 + s * s;
  d.sigma_c = cfg.sigma0 / std::sqrt(d.gamma_sq);
  d.t_col = cfg.r0 / cfg.k0;
  return d;
}

BeamGeometry::BeamGeometry(const Vec3& axis_) : axis(axis_) {
  if (std::abs(axis.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("BeamGeometry: axis must have unit norm");
}

}  // namespace swp
