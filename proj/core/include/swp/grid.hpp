#pragma once

#include <Eigen/Dense>

namespace swp {

// Two-particle amplitude on discrete single-particle bases, with per-index
// quadrature weights (uniform weights = 1 allowed).
struct GridState {
  Eigen::MatrixXcd psi;  // shape (n1, n2)
  Eigen::VectorXd w1;
  Eigen::VectorXd w2;

  GridState(Eigen::MatrixXcd psi_, Eigen::VectorXd w1_, Eigen::VectorXd w2_);
  explicit GridState(Eigen::MatrixXcd psi_);  // uniform unit weights
};

// Exact purity Tr(rho1^2) of the normalized grid state, rho1 the reduced
// density matrix from contracting the second index.
double grid_purity_exact(const GridState& state);

struct ExpansionCheckResult {
  double p_exact;
  double p_formula;
  double residual;    // |p_exact - p_formula|
  double ratio_eps3;  // residual / eps^3
  double I1, I2, I3;
};

// Builds psi = (phi1 x phi2 + eps * phi_s)/sqrt(N) on the grid and compares
// the exact purity with the second-order expansion evaluated from discrete
// overlap integrals. phi1/phi2/phi_s must be unit-norm under the weights.
ExpansionCheckResult expansion_check(const Eigen::VectorXcd& phi1,
                                     const Eigen::VectorXcd& phi2,
                                     const Eigen::MatrixXcd& phi_s, double eps,
                                     const Eigen::VectorXd& w1,
                                     const Eigen::VectorXd& w2);

// Uniform-weight overload.
ExpansionCheckResult expansion_check(const Eigen::VectorXcd& phi1,
                                     const Eigen::VectorXcd& phi2,
                                     const Eigen::MatrixXcd& phi_s, double eps);

}  // namespace swp
