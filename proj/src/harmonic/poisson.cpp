#include "msp/harmonic/poisson.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "msp/harmonic/quadrature.hpp"

namespace msp::harmonic {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLog2 = std::numbers::ln2;

void check_radius(double r, bool allow_zero) {
  if (!(r < 1) || r < 0 || (!allow_zero && r == 0)) throw std::invalid_argument("radius outside the disc");
}

double series(double r, double phi) {
  double sum = 0;
  double power = r;
  for (int n = 1; power > 1e-20; ++n, power *= r) {
    const double term = power * std::cos(n * phi) / (n + 2);
    sum += n % 2 == 1 ? term : -term;
  }
  return sum;
}

}  // namespace

double poisson_kernel(double r, double t) {
  check_radius(r, true);
  return (1 - r * r) / (1 + r * r - 2 * r * std::cos(t));
}

double u_disc(double r, double phi) {
  check_radius(r, true);
  if (r < 0.25) return series(r, phi);
  const double L = 0.5 * std::log1p(2 * r * std::cos(phi) + r * r);
  const double A = std::atan2(r * std::sin(phi), 1 + r * std::cos(phi));
  return (std::cos(2 * phi) * L + std::sin(2 * phi) * A) / (r * r) - std::cos(phi) / r + 0.5;
}

double U_direct(double r, double phi) {
  check_radius(r, false);
  return kLog2 - 0.5 - u_disc(r, phi);
}

double h_gap(double s) {
  return kLog2 - 1 - std::cos(s) + (kPi - s) / 2 * std::sin(2 * s) - std::cos(2 * s) * std::log(2 * std::sin(s / 2));
}

double U_poisson(double r, double phi, int n_quad) {
  check_radius(r, true);
  // h is even, so fold onto t = pi - s in [0, pi).
  double sum = 0;
  for (const QuadNode& n : graded_rule(n_quad)) {
    const double t = kPi - n.x;
    sum += n.w * h_gap(n.x) * (poisson_kernel(r, phi - t) + poisson_kernel(r, phi + t));
  }
  return sum / (2 * kPi);
}

void check_gap_order(double r, double phi, double delta, double eps) {
  check_radius(r, true);
  const double a = phi / 2 - delta;
  const double b = phi / 2 + delta;
  if (!(eps > 0)) throw ParameterOrderError("eps must be positive");
  if (!(eps < delta)) throw ParameterOrderError("eps must be below delta");
  if (!(a - eps > 0)) throw ParameterOrderError("a - eps must be positive");
  if (!(b + eps < kPi)) throw ParameterOrderError("b + eps must be below pi");
}

std::pair<double, double> gap_factors(double r, double phi, double delta, double t) {
  const double a = phi / 2 - delta;
  const double b = phi / 2 + delta;
  return {h_gap(kPi - b - t) - h_gap(kPi - a - t), poisson_kernel(r, a - t) - poisson_kernel(r, b - t)};
}

double strict_gap_D(double r, double phi, double delta, double eps, int n_quad) {
  check_gap_order(r, phi, delta, eps);
  const int panels = std::max(1, (n_quad + 15) / 16);
  return integrate(
      [&](double t) {
        const auto [dh, dp] = gap_factors(r, phi, delta, t);
        return dh * dp;
      },
      -eps, eps, panels);
}

ScanReport theorem_scan(const std::vector<double>& r_grid, const std::vector<double>& phi_grid) {
  ScanReport report;
  report.minimum.margin = std::numeric_limits<double>::infinity();
  for (double r : r_grid) {
    if (!(r > 0 && r < 1)) throw std::invalid_argument("scan radii must lie in (0, 1)");
    const double base = U_direct(r, 0);
    for (double phi : phi_grid) {
      if (!(phi > 0 && phi < kPi)) throw std::invalid_argument("scan angles must lie in (0, pi)");
      const ScanPoint point{r, phi, U_direct(r, phi) - base};
      ++report.pairs;
      if (!(point.margin > 0)) report.violations.push_back(point);
      if (point.margin < report.minimum.margin) report.minimum = point;
    }
  }
  return report;
}

}  // namespace msp::harmonic
