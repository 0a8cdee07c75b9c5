#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "msp/paperfns/closed_forms.hpp"

namespace msp::paperfns {

// Flett's function F(t) = sum_{n>=1} sin(t/n) / n.

/// Enclosure of F over t (t >= 0) from the first N terms plus a tail bound.
/// For x >= 0, x - x^3/6 <= sin x <= x - x^3/6 + x^5/120, so the tail lies in
/// t T2 - t^3 T4 / 6 + [0, t^5 T6 / 120] with T_s = sum_{n>N} n^-s,
/// T2 = pi^2/6 - H2(N), T4 = pi^4/90 - H4(N), 0 <= T6 <= 1 / (5 N^5).
/// Requires N >= ceil(t.hi).
Interval flett_eval(const Interval& t, long N, Precision p);

/// Term count used by the registry entry for F.
long flett_terms(const Interval& t);

/// Bracket [lo, hi] of the first positive zero of F with F(lo) > 0 > F(hi),
/// refined to width <= tol. Throws std::runtime_error if the signs cannot be
/// separated.
Interval flett_first_zero(const Dyadic& tol);

/// R_23(t) = sum_{n=1}^{23} cos(t log n) / n.
double r23_eval(double t);
Interval r23_enclose(const Interval& t, Precision p);

/// Zeros of R_23 in [lo, hi]: scan with step `scan`, then bisection. Sorted,
/// with no two closer than tol.
std::vector<double> r23_zeros(double lo, double hi, double tol, double scan = 1.0 / 128);

/// log Q(x), Q(x) = (1^x + ... + (n+1)^x) / (1^x + ... + n^x).
double log_q(int n, double x);

/// Second central differences of f on a uniform grid are >= -tol.
bool grid_convex(const std::vector<double>& grid, const std::function<double(double)>& f, double tol = 1e-12);

/// Log-convexity of Q on the grid, 2 <= n <= 10.
bool q_logconvex_check(int n, const std::vector<double>& grid);

/// Uniform grid lo, lo + step, ..., up to hi.
std::vector<double> uniform_grid(double lo, double hi, double step);

class RadiusError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct SeriesValue {
  double value = 0;
  double tail_bound = 0;
};

/// sum_{n=1}^N (-1)^{n-1} r^n cos(n phi) / (n + 2) with the geometric tail
/// bound r^{N+1} / ((N + 3)(1 - r)). 0 < r < 1; r = 1 throws RadiusError.
SeriesValue u_series(double r, double phi, int N);

/// The series at phi lies strictly below the series at 0, tails included.
bool main_inequality_check(double r, double phi, int N);

}  // namespace msp::paperfns
