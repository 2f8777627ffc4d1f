#include "swp/shell.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "swp/analytic.hpp"
#include "swp/gaussian.hpp"
#include "swp/oracle.hpp"
#include "swp/quadrature.hpp"
#include "swp/rng.hpp"

namespace swp {

namespace {

constexpr double kPi = std::numbers::pi;

struct ShellScales {
  double k_lo, k_hi, cm_width;
};

ShellScales resolve_spec(const CollisionConfig& cfg, const RadialGridSpec& spec) {
  ShellScales s;
  s.k_lo = spec.k_lo > 0.0 ? spec.k_lo
                           : std::max(1e-6 * cfg.k0, cfg.k0 - 10.0 * cfg.sigma0);
  s.k_hi = spec.k_hi > 0.0 ? spec.k_hi : cfg.k0 + 10.0 * cfg.sigma0;
  s.cm_width = spec.cm_width > 0.0 ? spec.cm_width : cfg.sigma0;
  if (!(s.k_hi > s.k_lo)) throw std::invalid_argument("shell: degenerate radial window");
  return s;
}

void parallel_rows(int n, const std::function<void(int)>& body) {
  unsigned hw = std::thread::hardware_concurrency();
  int nt = hw > 0 ? static_cast<int>(hw) : 1;
  nt = std::min(nt, n);
  if (nt <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([&, t]() {
      for (int i = t; i < n; i += nt) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

PairAmplitude shell_pair_amplitude(const CollisionConfig& cfg,
                                   const PhaseShiftModel& model) {
  const double eps2 = epsilon_sq_quadrature(cfg, model);
  if (!(eps2 > 0.0))
    throw std::invalid_argument("shell_pair_amplitude: scattered wave has zero norm");
  const double eps = std::sqrt(eps2);
  const ScatteredWave wave(cfg, model);
  const double s0 = cfg.sigma0;
  return [wave, eps, s0](const Vec3& k1, const Vec3& k2) -> std::complex<double> {
    const double krel = 0.5 * (k1 - k2).norm();
    if (krel <= 0.0) return {0.0, 0.0};
    return gaussian_gamma(k1 + k2, Vec3::Zero(), 1.0 / s0) *
           scattered_amplitude(krel, 0.0, wave) / eps;
  };
}

SectorDecomposition shell_sector_decompose(const PairAmplitude& amplitude,
                                           const CollisionConfig& cfg, int l_max,
                                           const RadialGridSpec& spec,
                                           const Eigen::Matrix3d& frame) {
  if (l_max < 8) throw std::invalid_argument("shell_sector_decompose: l_max must be >= 8");
  const ShellScales scales = resolve_spec(cfg, spec);
  const int n = spec.n_radial;
  const auto k_rule = gauss_legendre(n).mapped(scales.k_lo, scales.k_hi);
  const auto& ang_base = gauss_legendre(spec.n_angular);
  const double cm_cut = 14.0 * scales.cm_width;

  SectorDecomposition out;
  out.l_max = l_max;
  out.sectors.assign(l_max + 1, Eigen::MatrixXcd::Zero(n, n));
  out.k_nodes = Eigen::Map<const Eigen::VectorXd>(k_rule.nodes.data(), n);
  out.k_weights = Eigen::Map<const Eigen::VectorXd>(k_rule.weights.data(), n);

  const Vec3 e1 = frame.col(0), e3 = frame.col(2);

  parallel_rows(n, [&](int i) {
    std::vector<double> pl(l_max + 1);
    std::vector<std::complex<double>> cl(l_max + 1);
    const double p = k_rule.nodes[i];
    for (int j = 0; j < n; ++j) {
      const double q = k_rule.nodes[j];
      // Integrate over the total momentum K instead of cos(theta_12); the
      // center-of-mass gaussian confines K to a few cm_width units.
      const double K_lo = std::abs(p - q);
      const double K_hi = std::min(p + q, cm_cut);
      std::fill(cl.begin(), cl.end(), std::complex<double>(0.0, 0.0));
      if (K_hi > K_lo) {
        const auto K_rule = ang_base.mapped(K_lo, K_hi);
        for (size_t a = 0; a < K_rule.nodes.size(); ++a) {
          const double K = K_rule.nodes[a];
          double x = (K * K - p * p - q * q) / (2.0 * p * q);
          x = std::clamp(x, -1.0, 1.0);
          const double st = std::sqrt(std::max(0.0, 1.0 - x * x));
          const Vec3 k1 = p * e3;
          const Vec3 k2 = q * (st * e1 + x * e3);
          const std::complex<double> psi = amplitude(k1, k2);
          const double jac = K / (p * q);
          legendre_all(l_max, x, pl);
          const std::complex<double> base = 2.0 * kPi * K_rule.weights[a] * jac * psi;
          for (int l = 0; l <= l_max; ++l) cl[l] += base * pl[l];
        }
      }
      const double node_factor =
          p * q * std::sqrt(k_rule.weights[i] * k_rule.weights[j]);
      for (int l = 0; l <= l_max; ++l) out.sectors[l](i, j) = cl[l] * node_factor;
    }
  });

  double norm = 0.0;
  for (int l = 0; l <= l_max; ++l) norm += (2.0 * l + 1.0) * out.sectors[l].squaredNorm();
  out.raw_norm = norm;
  if (!(norm > 0.0))
    throw std::invalid_argument("shell_sector_decompose: zero-norm amplitude");
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& A : out.sectors) A *= scale;
  return out;
}

SectorDecomposition shell_sector_decompose(const CollisionConfig& cfg,
                                           const PhaseShiftModel& model, int l_max,
                                           const RadialGridSpec& spec) {
  return shell_sector_decompose(shell_pair_amplitude(cfg, model), cfg, l_max, spec);
}

double shell_purity(const SectorDecomposition& decomp) {
  double purity = 0.0;
  for (int l = 0; l <= decomp.l_max; ++l) {
    const Eigen::MatrixXcd& A = decomp.sectors[l];
    if (A.squaredNorm() == 0.0) continue;
    const Eigen::MatrixXcd g = A.adjoint() * A;
    purity += (2.0 * l + 1.0) * g.squaredNorm();
  }
  return purity;
}

double shell_roundtrip_residual(const SectorDecomposition& decomp,
                                const PairAmplitude& amplitude,
                                const CollisionConfig& cfg, int n_samples,
                                std::uint64_t seed) {
  RngStream rng(seed, 0);
  const int n = static_cast<int>(decomp.k_nodes.size());
  const double sqrt_raw = std::sqrt(decomp.raw_norm);
  std::vector<double> pl(decomp.l_max + 1);

  double max_err = 0.0, max_amp = 0.0;
  for (int s = 0; s < n_samples; ++s) {
    const int i = static_cast<int>(rng.uniform() * n) % n;
    const int j = static_cast<int>(rng.uniform() * n) % n;
    const double p = decomp.k_nodes[i], q = decomp.k_nodes[j];
    // Concentrate samples near the back-to-back region where the state lives,
    // with a few spread over the full angular range.
    double x;
    if (s % 4 == 0) {
      x = -1.0 + 2.0 * rng.uniform();
    } else {
      const double w = cfg.sigma0 * cfg.sigma0 / (cfg.k0 * cfg.k0);
      x = -1.0 + std::min(2.0, 20.0 * w * rng.uniform());
    }
    const double st = std::sqrt(std::max(0.0, 1.0 - x * x));
    const std::complex<double> truth =
        amplitude(p * Vec3::UnitZ(), q * Vec3(st, 0.0, x));

    legendre_all(decomp.l_max, x, pl);
    std::complex<double> rec{0.0, 0.0};
    const double node_factor =
        p * q * std::sqrt(decomp.k_weights[i] * decomp.k_weights[j]);
    for (int l = 0; l <= decomp.l_max; ++l) {
      const std::complex<double> c_l =
          decomp.sectors[l](i, j) * sqrt_raw / node_factor;
      rec += (2.0 * l + 1.0) / (4.0 * kPi) * c_l * pl[l];
    }
    max_err = std::max(max_err, std::abs(rec - truth));
    max_amp = std::max(max_amp, std::abs(truth));
  }
  return max_amp > 0.0 ? max_err / max_amp : max_err;
}

namespace {

// Proposal matched to |Psi_s|^2: total momentum K gaussian with per-component
// variance sigma0^2, relative momentum on the shell (radial gaussian at k0 of
// std sigma0/2, isotropic direction).
struct ShellProposal {
  double sigma0, k0;

  struct Draw {
    Vec3 k1, k2;
    double pdf;
  };

  Draw sample(RngStream& rng) const {
    const Vec3 K(sigma0 * rng.normal(), sigma0 * rng.normal(), sigma0 * rng.normal());
    double kr;
    do {
      kr = k0 + 0.5 * sigma0 * rng.normal();
    } while (kr <= 0.0);
    const double ct = 2.0 * rng.uniform() - 1.0;
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    const double phi = 2.0 * kPi * rng.uniform();
    const Vec3 krel = kr * Vec3(st * std::cos(phi), st * std::sin(phi), ct);

    const double qK = std::pow(2.0 * kPi * sigma0 * sigma0, -1.5) *
                      std::exp(-K.squaredNorm() / (2.0 * sigma0 * sigma0));
    const double dr = (kr - k0) / (0.5 * sigma0);
    const double q_rad = std::exp(-0.5 * dr * dr) /
                         (0.5 * sigma0 * std::sqrt(2.0 * kPi));
    const double qk = q_rad / (4.0 * kPi * kr * kr);
    return {0.5 * K + krel, 0.5 * K - krel, qK * qk};
  }
};

}  // namespace

McEstimate shell_norm_mc(const CollisionConfig& cfg, const PhaseShiftModel& model,
                         std::uint64_t n_samples, std::uint64_t seed, int n_threads) {
  const PairAmplitude psi = shell_pair_amplitude(cfg, model);
  const ShellProposal prop{cfg.sigma0, cfg.k0};
  return run_mc(
      n_samples, seed,
      [&](RngStream& rng) {
        const auto d = prop.sample(rng);
        const double w = std::norm(psi(d.k1, d.k2)) / d.pdf;
        if (!std::isfinite(w))
          throw std::logic_error("shell_norm_mc: non-finite integrand sample");
        return w;
      },
      64, n_threads);
}

McEstimate shell_purity_mc(const CollisionConfig& cfg, const PhaseShiftModel& model,
                           std::uint64_t n_samples, std::uint64_t seed, int n_threads) {
  const PairAmplitude psi = shell_pair_amplitude(cfg, model);
  const ShellProposal prop{cfg.sigma0, cfg.k0};
  return run_mc(
      n_samples, seed,
      [&](RngStream& rng) {
        const auto a = prop.sample(rng);
        const auto b = prop.sample(rng);
        const std::complex<double> f = psi(a.k1, a.k2) * psi(b.k1, b.k2) *
                                       std::conj(psi(a.k1, b.k2)) *
                                       std::conj(psi(b.k1, a.k2));
        const double w = f.real() / (a.pdf * b.pdf);
        if (!std::isfinite(w))
          throw std::logic_error("shell_purity_mc: non-finite integrand sample");
        return w;
      },
      64, n_threads);
}

}  // namespace swp
