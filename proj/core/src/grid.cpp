#include "swp/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace swp {

GridState::GridState(Eigen::MatrixXcd psi_, Eigen::VectorXd w1_, Eigen::VectorXd w2_)
    : psi(std::move(psi_)), w1(std::move(w1_)), w2(std::move(w2_)) {
  if (w1.size() != psi.rows() || w2.size() != psi.cols())
    throw std::invalid_argument("GridState: weight sizes do not match psi");
  if ((w1.array() <= 0.0).any() || (w2.array() <= 0.0).any())
    throw std::invalid_argument("GridState: weights must be positive");
  if (!psi.allFinite()) throw std::invalid_argument("GridState: non-finite entries");
}

GridState::GridState(Eigen::MatrixXcd psi_)
    : psi(std::move(psi_)),
      w1(Eigen::VectorXd::Ones(psi.rows())),
      w2(Eigen::VectorXd::Ones(psi.cols())) {
  if (!psi.allFinite()) throw std::invalid_argument("GridState: non-finite entries");
}

double grid_purity_exact(const GridState& state) {
  const double norm =
      (state.psi.array().abs2() *
       (state.w1 * state.w2.transpose()).array()).sum();
  if (!(norm > 0.0)) throw std::invalid_argument("grid_purity_exact: zero-norm state");

  // rho1 = psi W2 psi^dagger / norm; purity = Tr[(rho1 W1)^2].
  const Eigen::MatrixXcd rho1 =
      state.psi * state.w2.asDiagonal() * state.psi.adjoint() / norm;
  const Eigen::MatrixXcd rw = rho1 * state.w1.asDiagonal();
  return (rw * rw).trace().real();
}

namespace {

ExpansionCheckResult expansion_check_impl(const Eigen::VectorXcd& phi1,
                                          const Eigen::VectorXcd& phi2,
                                          const Eigen::MatrixXcd& phi_s, double eps,
                                          const Eigen::VectorXd& w1,
                                          const Eigen::VectorXd& w2) {
  if (!(eps >= 0.0 && eps <= 0.2))
    throw std::invalid_argument("expansion_check: eps must be in [0, 0.2]");
  auto norm1 = (phi1.array().abs2() * w1.array()).sum();
  auto norm2 = (phi2.array().abs2() * w2.array()).sum();
  auto norm_s = (phi_s.array().abs2() * (w1 * w2.transpose()).array()).sum();
  if (std::abs(norm1 - 1.0) > 1e-6 || std::abs(norm2 - 1.0) > 1e-6 ||
      std::abs(norm_s - 1.0) > 1e-6)
    throw std::invalid_argument("expansion_check: inputs must be unit-norm");

  const Eigen::MatrixXcd product = phi1 * phi2.transpose();
  const Eigen::MatrixXcd psi_un = product + eps * phi_s;
  const double p_exact = grid_purity_exact(GridState(psi_un, w1, w2));

  // Discrete overlap integrals of the expansion.
  const std::complex<double> c =
      (phi_s.conjugate().array() * product.array() *
       (w1 * w2.transpose()).array()).sum();
  const double I1 = std::norm(c);
  const Eigen::VectorXcd inner2 =
      phi_s.adjoint() * (w1.asDiagonal() * phi1);  // over k1, indexed by k2
  const double I2 = (inner2.array().abs2() * w2.array()).sum();
  const Eigen::VectorXcd inner3 =
      phi_s.conjugate() * (w2.asDiagonal() * phi2);  // over k2, indexed by k1
  const double I3 = (inner3.array().abs2() * w1.array()).sum();

  const double p_formula = 1.0 - 2.0 * eps * eps * (1.0 + I1 - I2 - I3);

  ExpansionCheckResult res;
  res.p_exact = p_exact;
  res.p_formula = p_formula;
  res.residual = std::abs(p_exact - p_formula);
  res.ratio_eps3 = eps > 0.0 ? res.residual / (eps * eps * eps) : 0.0;
  res.I1 = I1;
  res.I2 = I2;
  res.I3 = I3;
  return res;
}

}  // namespace

ExpansionCheckResult expansion_check(const Eigen::VectorXcd& phi1,
                                     const Eigen::VectorXcd& phi2,
                                     const Eigen::MatrixXcd& phi_s, double eps,
                                     const Eigen::VectorXd& w1,
                                     const Eigen::VectorXd& w2) {
  return expansion_check_impl(phi1, phi2, phi_s, eps, w1, w2);
}

ExpansionCheckResult expansion_check(const Eigen::VectorXcd& phi1,
                                     const Eigen::VectorXcd& phi2,
                                     const Eigen::MatrixXcd& phi_s, double eps) {
  return expansion_check_impl(phi1, phi2, phi_s, eps,
                              Eigen::VectorXd::Ones(phi1.size()),
                              Eigen::VectorXd::Ones(phi2.size()));
}

}  // namespace swp
