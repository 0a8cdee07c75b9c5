#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace msp::harmonic {

/// P_r(t) = (1 - r^2) / (1 + r^2 - 2 r cos t), for 0 <= r < 1.
double poisson_kernel(double r, double t);

// Disc extension of the series sum_{n>=1} (-1)^{n-1} r^n cos(n phi) / (n + 2):
//   Re[(log(1 + z) - z + z^2/2) / z^2],  z = r e^{i phi}.
// Small radii use the series directly to avoid the r^-2 cancellation.
double u_disc(double r, double phi);

/// Harmonic function with boundary values h: U = (log 2 - 1/2) - u_disc(r, phi), 0 < r < 1.
double U_direct(double r, double phi);

/// Same function as a Poisson integral of h over the circle, 0 <= r < 1.
double U_poisson(double r, double phi, int n_quad = 4096);

/// h(pi - s) written in the gap s so that it stays accurate as s -> 0.
double h_gap(double s);

class ParameterOrderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// With a = phi/2 - delta and b = phi/2 + delta, requires
// 0 < a - eps, eps < delta and b + eps < pi.
void check_gap_order(double r, double phi, double delta, double eps);

/// The two factors of the gap integrand at offset t:
/// h(b + t) - h(a + t) and P_r(a - t) - P_r(b - t).
std::pair<double, double> gap_factors(double r, double phi, double delta, double t);

/// Integral over (-eps, eps) of the product of the gap factors.
double strict_gap_D(double r, double phi, double delta, double eps, int n_quad = 256);

struct ScanPoint {
  double r;
  double phi;
  double margin;  // U(r, phi) - U(r, 0)
};

struct ScanReport {
  std::size_t pairs = 0;
  std::vector<ScanPoint> violations;
  ScanPoint minimum{0, 0, 0};
};

/// Checks U(r, phi) > U(r, 0) for every r in (0, 1) and phi in (0, pi) of the grids.
ScanReport theorem_scan(const std::vector<double>& r_grid, const std::vector<double>& phi_grid);

}  // namespace msp::harmonic
