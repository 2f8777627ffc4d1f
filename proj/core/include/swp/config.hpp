#pragma once

#include <Eigen/Dense>

namespace swp {

using Vec3 = Eigen::Vector3d;

// Physical parameters of the head-on collision, in natural units
// (hbar = mu = 1). sigma0 is the momentum-space width of each single-particle
// packet, k0 the magnitude of the mean relative momentum, r0 the scalar
// separation parameter entering the scattered-wave phase, t the elapsed time
// (enters amplitude phases only, never the purity).
struct CollisionConfig {
  double sigma0;
  double k0;
  double r0;
  double t;

  CollisionConfig(double sigma0_, double k0_, double r0_, double t_ = 0.0);

  // Regime diagnostics.
  double sigma0_over_k0() const { return sigma0 / k0; }
  double spreading_parameter() const { return sigma0 * sigma0 * r0 / (2.0 * k0); }
};

// Scales derived from the collision parameters: gamma_sq is the spreading
// factor of the spatial packet width at collision time, sigma_c = sigma0/gamma
// the effective momentum width, t_col = r0/k0 the collision time.
struct DerivedScales {
  double gamma_sq;
  double sigma_c;
  double t_col;
};

DerivedScales derived_scales(const CollisionConfig& cfg);

// Sign/axis conventions for the beam: packet 1 carries mean momentum
// +k0*axis, packet 2 carries -k0*axis.
struct BeamGeometry {
  Vec3 axis = Vec3::UnitZ();

  BeamGeometry() = default;
  explicit BeamGeometry(const Vec3& axis_);
};

}  // namespace swp
