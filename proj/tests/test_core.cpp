#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "swp/config.hpp"
#include "swp/gaussian.hpp"
#include "swp/quadrature.hpp"
#include "swp/rng.hpp"

using namespace swp;
using std::numbers::pi;

TEST_CASE("gaussian_gamma square-integrates to 1 (separable quadrature)") {
  // |Gamma|^2 factorizes into three identical 1-D gaussians of std 1/c.
  const double c = 1.7;
  const auto rule = gauss_legendre(80).mapped(-12.0 / c, 12.0 / c);
  double one_d = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    one_d += rule.weights[i] * std::sqrt(c * c / (2.0 * pi)) *
             std::exp(-0.5 * c * c * x * x);
  }
  CHECK(std::pow(one_d, 3) == doctest::Approx(1.0).epsilon(1e-12));

  // Cross-check against the function itself at a displaced center.
  const Vec3 b(0.3, -0.1, 0.8);
  double norm3 = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    for (size_t j = 0; j < rule.nodes.size(); ++j) {
      // z-integral done analytically via the 1-D factor above.
      const Vec3 a(b.x() + rule.nodes[i], b.y() + rule.nodes[j], b.z());
      const double g = gaussian_gamma(a, b, c);
      norm3 += rule.weights[i] * rule.weights[j] * g * g;
    }
  norm3 *= std::sqrt(2.0 * pi / (c * c));  // analytic z-integral of the gaussian
  CHECK(norm3 == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("gaussian_gamma peak value and radial profile") {
  const double c = 2.0;
  CHECK(gaussian_gamma(Vec3::Zero(), Vec3::Zero(), c) ==
        doctest::Approx(std::pow(c * c / (2.0 * pi), 0.75)));
  // For colinear a, b the value depends only on |a| - |b|.
  const Vec3 n = Vec3(1.0, 2.0, -2.0).normalized();
  CHECK(gaussian_gamma(1.3 * n, 0.4 * n, c) ==
        doctest::Approx(gaussian_gamma_radial(1.3, 0.4, c)).epsilon(1e-14));
}

TEST_CASE("cm_rel and rel_cm are inverse maps") {
  RngStream rng(11, 0);
  for (int i = 0; i < 100; ++i) {
    const Vec3 k1(rng.normal(), rng.normal(), rng.normal());
    const Vec3 k2(rng.normal(), rng.normal(), rng.normal());
    const auto cr = cm_rel(k1, k2);
    CHECK((cr.K - (k1 + k2)).norm() < 1e-15);
    CHECK((cr.k - 0.5 * (k1 - k2)).norm() < 1e-15);
    const auto [r1, r2] = rel_cm(cr.K, cr.k);
    CHECK((r1 - k1).norm() < 1e-14);
    CHECK((r2 - k2).norm() < 1e-14);
  }
}

TEST_CASE("initial amplitude factorizes into cm x relative parts") {
  const CollisionConfig cfg(0.05, 1.0, 7.0);
  const Vec3 kc = cfg.k0 * Vec3::UnitZ();
  RngStream rng(23, 0);
  for (int i = 0; i < 100; ++i) {
    const Vec3 k1 = kc + 0.1 * Vec3(rng.normal(), rng.normal(), rng.normal());
    const Vec3 k2 = -kc + 0.1 * Vec3(rng.normal(), rng.normal(), rng.normal());
    const auto lhs = initial_amplitude(k1, k2, cfg);

    const auto cr = cm_rel(k1, k2);
    const double phase = -(cr.k - kc).dot(cfg.r0 * Vec3::UnitZ());
    const std::complex<double> rhs =
        gaussian_gamma(cr.K, Vec3::Zero(), 1.0 / cfg.sigma0) *
        gaussian_gamma(cr.k, kc, 2.0 / cfg.sigma0) *
        std::exp(std::complex<double>(0.0, phase));
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
  }
}

TEST_CASE("derived scales") {
  const CollisionConfig cfg(0.01, 1.0, 10.0);
  const auto s = derived_scales(cfg);
  const double spread = 0.01 * 0.01 * 10.0 / 2.0;
  CHECK(s.gamma_sq == doctest::Approx(1.0 + spread * spread).epsilon(1e-15));
  CHECK(s.sigma_c == doctest::Approx(0.01 / std::sqrt(s.gamma_sq)).epsilon(1e-15));
  CHECK(s.t_col == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(cfg.spreading_parameter() == doctest::Approx(spread));
}

TEST_CASE("collision config rejects invalid parameters") {
  CHECK_THROWS(CollisionConfig(0.0, 1.0, 0.0));
  CHECK_THROWS(CollisionConfig(-0.1, 1.0, 0.0));
  CHECK_THROWS(CollisionConfig(0.1, 0.0, 0.0));
  CHECK_THROWS(CollisionConfig(0.1, 1.0, -1.0));
  CHECK_THROWS(CollisionConfig(0.1, 1.0, 0.0, -1.0));
  CHECK_NOTHROW(CollisionConfig(0.1, 1.0, 0.0, 0.0));
}

TEST_CASE("beam geometry requires a unit axis") {
  CHECK_NOTHROW(BeamGeometry(Vec3::UnitX()));
  CHECK_THROWS(BeamGeometry(Vec3(0.0, 0.0, 2.0)));
}

TEST_CASE("rng streams are deterministic and distinct") {
  RngStream a(42, 3), b(42, 3), c(42, 4);
  bool same = true, distinct = false;
  for (int i = 0; i < 64; ++i) {
    const auto xa = a.next_u64();
    same = same && (xa == b.next_u64());
    distinct = distinct || (xa != c.next_u64());
  }
  CHECK(same);
  CHECK(distinct);
}

TEST_CASE("rng uniform lies in [0,1) and normal has sane moments") {
  RngStream rng(7, 0);
  double sum = 0.0, sum2 = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double z = rng.normal();
    sum += z;
    sum2 += z * z;
  }
  CHECK(std::abs(sum / n) < 0.01);
  CHECK(sum2 / n == doctest::Approx(1.0).epsilon(0.02));
}
