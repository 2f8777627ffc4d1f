#include "swp/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace swp {

namespace {

// Returns (P_n(x), P_n'(x)).
std::pair<double, double> legendre_with_deriv(int n, double x) {
  double pm1 = 1.0, p = x;
  for (int l = 2; l <= n; ++l) {
    double pl = ((2 * l - 1) * x * p - (l - 1) * pm1) / l;
    pm1 = p;
    p = pl;
  }
  if (n == 0) return {1.0, 0.0};
  double dp = n * (x * p - pm1) / (x * x - 1.0);
  return {p, dp};
}

GaussLegendre compute_rule(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      auto [p, d] = legendre_with_deriv(n, x);
      dp = d;
      double dx = p / d;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    auto [p, d] = legendre_with_deriv(n, x);
    dp = d;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;  // ascending order
    rule.weights[i] = w;
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

GaussLegendre GaussLegendre::mapped(double a, double b) const {
  GaussLegendre out;
  const double mid = 0.5 * (a + b), halfw = 0.5 * (b - a);
  out.nodes.reserve(nodes.size());
  out.weights.reserve(weights.size());
  for (size_t i = 0; i < nodes.size(); ++i) {
    out.nodes.push_back(mid + halfw * nodes[i]);
    out.weights.push_back(halfw * weights[i]);
  }
  return out;
}

const GaussLegendre& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussLegendre> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
  return it->second;
}

double legendre_p(int l, double x) {
  return legendre_with_deriv(l, x).first;
}

void legendre_all(int l_max, double x, std::span<double> out) {
  if (static_cast<int>(out.size()) < l_max + 1)
    throw std::invalid_argument("legendre_all: output span too small");
  out[0] = 1.0;
  if (l_max == 0) return;
  out[1] = x;
  for (int l = 2; l <= l_max; ++l)
    out[l] = ((2 * l - 1) * x * out[l - 1] - (l - 1) * out[l - 2]) / l;
}

}  // namespace swp
