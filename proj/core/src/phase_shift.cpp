#include "swp/phase_shift.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace swp {

namespace {

constexpr std::complex<double> kImag{0.0, 1.0};

void require_positive_k(double k) {
  if (!(k > 0.0)) throw std::invalid_argument("phase shift: k must be > 0");
}

// Square-well phase from matching the interior solution sin(kappa r) to the
// free solution at r = b. The atan branch index floor(kappa b / pi + 1/2)
// makes theta continuous in k; subtracting its k -> 0 value pins theta(0+) = 0
// (Levinson offset fixed to zero by convention).
double square_well_theta(const SquareWell& sw, double k) {
  if (!(sw.b > 0.0)) throw std::invalid_argument("SquareWell: b must be > 0");
  if (!(sw.V0 > 0.0)) throw std::invalid_argument("SquareWell: V0 must be > 0");
  const double kappa = std::sqrt(k * k + 2.0 * sw.V0);
  const double kappa0 = std::sqrt(2.0 * sw.V0);
  auto branch = [&](double kb) { return std::floor(kb / std::numbers::pi + 0.5); };
  const double n = branch(kappa * sw.b) - branch(kappa0 * sw.b);
  return -k * sw.b + std::atan((k / kappa) * std::tan(kappa * sw.b)) +
         std::numbers::pi * n;
}

double breit_wigner_theta(const BreitWigner& bw, double k) {
  if (!(bw.width > 0.0)) throw std::invalid_argument("BreitWigner: width must be > 0");
  const double E = 0.5 * k * k;
  return bw.theta_bg + std::atan2(0.5 * bw.width, bw.Er - E);
}

// Central differences with one Richardson pass, for models without closed-form
// derivatives.
ThetaDerivs fd_derivs(const PhaseShiftModel& model, double k) {
  double h = std::max(1e-4 * k, 1e-6);
  h = std::min(h, 0.5 * k);  // keep k - h positive
  auto d1 = [&](double hh) {
    return (theta(model, k + hh) - theta(model, k - hh)) / (2.0 * hh);
  };
  auto d2 = [&](double hh) {
    return (theta(model, k + hh) - 2.0 * theta(model, k) + theta(model, k - hh)) /
           (hh * hh);
  };
  ThetaDerivs d;
  d.theta = theta(model, k);
  d.theta_prime = (4.0 * d1(0.5 * h) - d1(h)) / 3.0;
  d.theta_double_prime = (4.0 * d2(0.5 * h) - d2(h)) / 3.0;
  return d;
}

}  // namespace

Tabulated::Tabulated(std::vector<double> k_grid, std::vector<double> theta_values)
    : k_(std::move(k_grid)), th_(std::move(theta_values)) {
  if (k_.size() != th_.size())
    throw std::invalid_argument("Tabulated: k and theta lengths differ");
  if (k_.size() < 4) throw std::invalid_argument("Tabulated: need at least 4 points");
  for (size_t i = 1; i < k_.size(); ++i)
    if (!(k_[i] > k_[i - 1]))
      throw std::invalid_argument("Tabulated: k grid must be strictly ascending");
  if (!(k_[0] > 0.0)) throw std::invalid_argument("Tabulated: k grid must be positive");

  // Natural cubic spline: solve the tridiagonal system for second derivatives.
  const size_t n = k_.size();
  m_.assign(n, 0.0);
  std::vector<double> u(n, 0.0);
  for (size_t i = 1; i + 1 < n; ++i) {
    double sig = (k_[i] - k_[i - 1]) / (k_[i + 1] - k_[i - 1]);
    double p = sig * m_[i - 1] + 2.0;
    m_[i] = (sig - 1.0) / p;
    u[i] = (th_[i + 1] - th_[i]) / (k_[i + 1] - k_[i]) -
           (th_[i] - th_[i - 1]) / (k_[i] - k_[i - 1]);
    u[i] = (6.0 * u[i] / (k_[i + 1] - k_[i - 1]) - sig * u[i - 1]) / p;
  }
  for (size_t i = n - 1; i-- > 1;) m_[i] = m_[i] * m_[i + 1] + u[i];
  m_[0] = m_[n - 1] = 0.0;
}

Tabulated Tabulated::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("Tabulated: cannot open '" + path + "'");
  std::vector<double> ks, ths;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ss(line);
    double k, th;
    if (!(ss >> k) || !(ss >> th))
      throw std::runtime_error(path + ": line " + std::to_string(line_no) +
                               ": expected two numeric columns");
    std::string extra;
    if (ss >> extra)
      throw std::runtime_error(path + ": line " + std::to_string(line_no) +
                               ": trailing garbage '" + extra + "'");
    ks.push_back(k);
    ths.push_back(th);
  }
  try {
    return Tabulated(std::move(ks), std::move(ths));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

namespace {
size_t spline_interval(const std::vector<double>& k, double x) {
  if (x < k.front() || x > k.back())
    throw std::invalid_argument("Tabulated: k out of table range");
  auto it = std::upper_bound(k.begin(), k.end(), x);
  size_t hi = static_cast<size_t>(it - k.begin());
  if (hi == 0) hi = 1;
  if (hi == k.size()) hi = k.size() - 1;
  return hi;
}
}  // namespace

double Tabulated::eval(double k) const {
  size_t hi = spline_interval(k_, k), lo = hi - 1;
  double h = k_[hi] - k_[lo];
  double a = (k_[hi] - k) / h, b = (k - k_[lo]) / h;
  return a * th_[lo] + b * th_[hi] +
         ((a * a * a - a) * m_[lo] + (b * b * b - b) * m_[hi]) * h * h / 6.0;
}

double Tabulated::eval_deriv(double k) const {
  size_t hi = spline_interval(k_, k), lo = hi - 1;
  double h = k_[hi] - k_[lo];
  double a = (k_[hi] - k) / h, b = (k - k_[lo]) / h;
  return (th_[hi] - th_[lo]) / h +
         ((3.0 * b * b - 1.0) * m_[hi] - (3.0 * a * a - 1.0) * m_[lo]) * h / 6.0;
}

double Tabulated::eval_deriv2(double k) const {
  size_t hi = spline_interval(k_, k), lo = hi - 1;
  double h = k_[hi] - k_[lo];
  double a = (k_[hi] - k) / h, b = (k - k_[lo]) / h;
  return a * m_[lo] + b * m_[hi];
}

double theta(const PhaseShiftModel& model, double k) {
  require_positive_k(k);
  return std::visit(
      [k](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, HardSphere>) {
          if (!(m.b > 0.0)) throw std::invalid_argument("HardSphere: b must be > 0");
          return -k * m.b;
        } else if constexpr (std::is_same_v<T, SquareWell>) {
          return square_well_theta(m, k);
        } else if constexpr (std::is_same_v<T, ZeroRange>) {
          if (!std::isfinite(m.a)) throw std::invalid_argument("ZeroRange: a must be finite");
          return -std::atan(k * m.a);
        } else if constexpr (std::is_same_v<T, BreitWigner>) {
          return breit_wigner_theta(m, k);
        } else {
          return m.eval(k);
        }
      },
      model);
}

ThetaDerivs theta_derivs(const PhaseShiftModel& model, double k) {
  require_positive_k(k);
  return std::visit(
      [&, k](const auto& m) -> ThetaDerivs {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, HardSphere>) {
          return {-k * m.b, -m.b, 0.0};
        } else if constexpr (std::is_same_v<T, ZeroRange>) {
          const double d = 1.0 + k * k * m.a * m.a;
          return {-std::atan(k * m.a), -m.a / d, 2.0 * k * m.a * m.a * m.a / (d * d)};
        } else if constexpr (std::is_same_v<T, BreitWigner>) {
          const double E = 0.5 * k * k;
          const double D = (m.Er - E) * (m.Er - E) + 0.25 * m.width * m.width;
          const double g = 0.5 * m.width / D;
          const double gp = m.width * (m.Er - E) / (D * D);  // dg/dE
          return {breit_wigner_theta(m, k), k * g, g + k * k * gp};
        } else if constexpr (std::is_same_v<T, Tabulated>) {
          return {m.eval(k), m.eval_deriv(k), m.eval_deriv2(k)};
        } else {
          return fd_derivs(model, k);
        }
      },
      model);
}

std::complex<double> f0(const PhaseShiftModel& model, double k) {
  require_positive_k(k);
  const double th = theta(model, k);
  return (std::exp(2.0 * kImag * th) - 1.0) / (2.0 * kImag * k);
}

double cross_section(const PhaseShiftModel& model, double k) {
  return 4.0 * std::numbers::pi * std::norm(f0(model, k));
}

}  // namespace swp
