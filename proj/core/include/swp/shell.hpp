#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "swp/config.hpp"
#include "swp/mc.hpp"
#include "swp/phase_shift.hpp"

namespace swp {

// Rotationally invariant two-particle amplitude Psi(k1, k2), a function of
// |k1|, |k2| and the angle between them only.
using PairAmplitude = std::function<std::complex<double>(const Vec3&, const Vec3&)>;

// Normalized scattered pair state phi_cm(|k1+k2|) * eta(|k1-k2|/2).
PairAmplitude shell_pair_amplitude(const CollisionConfig& cfg,
                                   const PhaseShiftModel& model);

struct RadialGridSpec {
  int n_radial = 200;
  int n_angular = 200;  // nodes of the angular (cos theta_12) quadrature
  double k_lo = 0.0;    // <= 0 selects k0 - 10 sigma0 (clamped positive)
  double k_hi = 0.0;    // <= 0 selects k0 + 10 sigma0
  double cm_width = 0.0;  // center-of-mass gaussian scale; <= 0 selects sigma0
};

// Legendre-sector decomposition of a rotationally invariant pair state: the
// reduced density matrix is block-diagonal in (l, m) with (2l+1)-fold
// degeneracy; sector l holds a radial matrix A_l with quadrature weights
// absorbed so that sum_l (2l+1) |A_l|_F^2 = 1 after normalization.
struct SectorDecomposition {
  int l_max;
  std::vector<Eigen::MatrixXcd> sectors;  // normalized A_l, l = 0..l_max
  Eigen::VectorXd k_nodes;
  Eigen::VectorXd k_weights;
  double raw_norm;  // sum_l (2l+1) |A_l|_F^2 before normalization

  double sector_norm(int l) const { return sectors[l].squaredNorm(); }
};

SectorDecomposition shell_sector_decompose(const PairAmplitude& amplitude,
                                           const CollisionConfig& cfg, int l_max,
                                           const RadialGridSpec& spec,
                                           const Eigen::Matrix3d& frame =
                                               Eigen::Matrix3d::Identity());

SectorDecomposition shell_sector_decompose(const CollisionConfig& cfg,
                                           const PhaseShiftModel& model, int l_max,
                                           const RadialGridSpec& spec = {});

// Purity P = sum_l (2l+1) Tr[(A_l A_l^dagger)^2] of the normalized state.
double shell_purity(const SectorDecomposition& decomp);

// Max reconstruction error over sampled (k1, k2, cos theta_12), relative to
// the largest sampled amplitude. Large residuals signal insufficient l_max.
double shell_roundtrip_residual(const SectorDecomposition& decomp,
                                const PairAmplitude& amplitude,
                                const CollisionConfig& cfg, int n_samples = 200,
                                std::uint64_t seed = 7);

// 6-D Monte Carlo of the state norm Int |Psi|^2; should be 1 for the
// normalized physical shell state.
McEstimate shell_norm_mc(const CollisionConfig& cfg, const PhaseShiftModel& model,
                         std::uint64_t n_samples, std::uint64_t seed,
                         int n_threads = 0);

// 12-D importance-sampled Monte Carlo of the purity integral for the shell
// state; coarse independent cross-check of shell_purity.
McEstimate shell_purity_mc(const CollisionConfig& cfg, const PhaseShiftModel& model,
                           std::uint64_t n_samples, std::uint64_t seed,
                           int n_threads = 0);

}  // namespace swp
