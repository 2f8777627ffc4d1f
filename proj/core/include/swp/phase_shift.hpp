#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

namespace swp {

// s-wave phase shift models. All are immutable values; theta(k) is finite and
// continuous on k > 0 for every variant.

struct HardSphere {
  double b;  // sphere radius, > 0
};

// Attractive square well of depth V0 > 0 and range b > 0 (V = -V0 for r < b).
struct SquareWell {
  double V0;
  double b;
};

// Zero-range interaction with scattering length a: theta = -atan(k a).
struct ZeroRange {
  double a;
};

// Background phase plus a resonance at energy Er (E = k^2/2, mu = 1).
struct BreitWigner {
  double Er;
  double width;  // > 0
  double theta_bg;
};

// Cubic-spline interpolation of tabulated (k, theta) pairs; strictly
// ascending k grid with at least 4 points.
class Tabulated {
 public:
  Tabulated(std::vector<double> k_grid, std::vector<double> theta_values);

  // Two-column text file (k theta), '#' comments; parse errors name the line.
  static Tabulated from_file(const std::string& path);

  double k_min() const { return k_[0]; }
  double k_max() const { return k_.back(); }
  double eval(double k) const;
  double eval_deriv(double k) const;
  double eval_deriv2(double k) const;

 private:
  std::vector<double> k_, th_, m_;  // m_: spline second derivatives
};

using PhaseShiftModel = std::variant<HardSphere, SquareWell, ZeroRange, BreitWigner, Tabulated>;

struct ThetaDerivs {
  double theta;
  double theta_prime;
  double theta_double_prime;
};

double theta(const PhaseShiftModel& model, double k);
ThetaDerivs theta_derivs(const PhaseShiftModel& model, double k);

// f0(k) = (e^{2 i theta} - 1) / (2 i k); satisfies Im f0 = k |f0|^2.
std::complex<double> f0(const PhaseShiftModel& model, double k);

// S0(k) = 4 pi |f0|^2.
double cross_section(const PhaseShiftModel& model, double k);

}  // namespace swp
