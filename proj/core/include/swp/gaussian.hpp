#pragma once

#include <complex>
#include <utility>

#include "swp/config.hpp"

namespace swp {

// Normalized 3D gaussian (c^2/2pi)^(3/4) exp[-(c^2/4)(a-b)^2], parameterized
// by the inverse width c; square-integrates to 1 over a.
double gaussian_gamma(const Vec3& a, const Vec3& b, double c);

// Radial profile of the same gaussian when a and b are colinear: depends only
// on |a| - |b|.
double gaussian_gamma_radial(double a, double b, double c);

struct CmRel {
  Vec3 K;  // k1 + k2
  Vec3 k;  // (k1 - k2) / 2
};

CmRel cm_rel(const Vec3& k1, const Vec3& k2);
std::pair<Vec3, Vec3> rel_cm(const Vec3& K, const Vec3& k);

// Initial two-particle momentum amplitude phi1(k1) * phi2(k2). Packet 1 is
// centered at +k0*axis with position phase -i(k1 - k0*axis).(r0/2)*axis,
// packet 2 mirrored.
std::complex<double> initial_amplitude(const Vec3& k1, const Vec3& k2,
                                       const CollisionConfig& cfg,
                                       const BeamGeometry& geom = {});

}  // namespace swp
