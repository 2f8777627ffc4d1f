#pragma once

#include <span>
#include <vector>

namespace swp {

// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  // Affine image of the rule on [a, b].
  GaussLegendre mapped(double a, double b) const;
};

// Nodes/weights by Newton iteration on P_n; results are cached per n.
const GaussLegendre& gauss_legendre(int n);

// P_l(x) for a single degree.
double legendre_p(int l, double x);

// Fills out[0..l_max] with P_0(x) .. P_l_max(x) via the three-term recurrence.
void legendre_all(int l_max, double x, std::span<double> out);

}  // namespace swp
