#pragma once

#include <cstdint>
#include <utility>

#include "swp/analytic.hpp"
#include "swp/config.hpp"
#include "swp/mc.hpp"
#include "swp/phase_shift.hpp"

namespace swp {

// Norm of the scattered wave by radial Gauss-Legendre quadrature of
// 4 pi Int k^2 |amplitude(k)|^2 dk with the exact theta(k) (no Taylor
// expansion). Window [max(1e-8 k0, k0 - 12 sigma0), k0 + 12 sigma0].
double epsilon_sq_quadrature(const CollisionConfig& cfg, const PhaseShiftModel& model,
                             int n_nodes = 200);

// Overlap integral I1 = |<phi_scat, phi1 phi2>|^2, reduced to a 2-D
// deterministic quadrature over (k, cos theta) using the center-of-mass
// factorization and axial symmetry.
double overlap_I1(const CollisionConfig& cfg, const PhaseShiftModel& model,
                  int n_nodes = 200);

// Interference integrals I2 and I3 by importance-sampled Monte Carlo of the
// 9-D expanded squared-modulus integrals. The two estimates use disjoint RNG
// streams derived from the same seed.
std::pair<McEstimate, McEstimate> mc_overlap_I2_I3(const CollisionConfig& cfg,
                                                   const PhaseShiftModel& model,
                                                   std::uint64_t n_samples,
                                                   std::uint64_t seed,
                                                   int n_threads = 0);

}  // namespace swp
