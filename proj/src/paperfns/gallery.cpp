#include "msp/paperfns/gallery.hpp"

#include <algorithm>
#include <cmath>

namespace msp::paperfns {

namespace {

using rigor::add;
using rigor::div;
using rigor::mul;
using rigor::sub;

// Tail sums sum_{n>N} n^-2 and n^-4 from the zeta values minus partial sums.
struct FlettTails {
  Interval t2, t4, t6;
};

FlettTails flett_tails(long N, Precision w) {
  const Interval pi = rigor::pi_enclosure(w);
  const Interval pi2 = sqr(pi, w);
  Interval z2 = div(pi2, Interval(6), w);
  Interval z4 = div(sqr(pi2, w), Interval(90), w);
  Interval h2(0);
  Interval h4(0);
  for (long n = 1; n <= N; ++n) {
    const Interval inv2 = div(Interval(1), Interval(n * n), w);
    h2 = add(h2, inv2, w);
    h4 = add(h4, sqr(inv2, w), w);
  }
  const Interval n5 = rigor::pow(Interval(N), 5, w);
  const Interval t6(Dyadic(0), div(Interval(1), rigor::mul(Interval(5), n5, w), w).hi());
  return {sub(z2, h2, w), sub(z4, h4, w), t6};
}

}  // namespace

Interval flett_eval(const Interval& t, long N, Precision p) {
  if (t.lo().sign() < 0) throw std::invalid_argument("flett_eval needs t >= 0");
  if (N < 1 || Dyadic(N) < t.hi()) throw std::invalid_argument("flett_eval needs N >= ceil(t)");
  const Precision w = p.plus(16);
  Interval sum(0);
  for (long n = 1; n <= N; ++n) {
    sum = add(sum, div(rigor::sin(div(t, Interval(n), w), w), Interval(n), w), w);
  }
  const FlettTails tails = flett_tails(N, w);
  const Interval t3 = rigor::pow(t, 3, w);
  const Interval t5 = rigor::pow(t, 5, w);
  Interval tail = sub(mul(t, tails.t2, w), div(mul(t3, tails.t4, w), Interval(6), w), w);
  tail = add(tail, div(mul(t5, tails.t6, w), Interval(120), w), w);
  return rigor::round_out(add(sum, tail, w), p);
}

long flett_terms(const Interval& t) {
  const double hi = std::ceil(t.hi().to_double());
  return std::max(64L, 2 * static_cast<long>(hi) + 16);
}

Interval flett_first_zero(const Dyadic& tol) {
  if (tol.sign() <= 0) throw std::invalid_argument("tolerance must be positive");
  const Precision p(64);
  long N = 1024;
  auto sign_at = [&](const Dyadic& t) {
    for (long n = N; n <= 16 * 1024; n *= 2) {
      const Interval f = flett_eval(Interval(t), n, p);
      if (f.positive()) return 1;
      if (f.negative()) return -1;
    }
    return 0;
  };
  // F is positive on (0, 48]; walk right in steps of 1/4 to the first negative value.
  Dyadic lo(48);
  if (sign_at(lo) != 1) throw std::runtime_error("flett_first_zero: F(48) not proved positive");
  Dyadic hi = lo;
  for (;;) {
    hi = hi + Dyadic(1).ldexp(-2);
    const int s = sign_at(hi);
    if (s < 0) break;
    if (s == 0) throw std::runtime_error("flett_first_zero: undecided sign at " + hi.str());
    lo = hi;
    if (hi > Dyadic(64)) throw std::runtime_error("flett_first_zero: no sign change below 64");
  }
  while (hi - lo > tol) {
    const Dyadic mid = (lo + hi).ldexp(-1);
    const int s = sign_at(mid);
    if (s == 0) throw std::runtime_error("flett_first_zero: undecided sign at " + mid.str());
    (s > 0 ? lo : hi) = mid;
  }
  return Interval(lo, hi);
}

double r23_eval(double t) {
  double sum = 0;
  for (int n = 1; n <= 23; ++n) sum += std::cos(t * std::log(static_cast<double>(n))) / n;
  return sum;
}

Interval r23_enclose(const Interval& t, Precision p) {
  const Precision w = p.plus(16);
  Interval sum(0);
  for (long n = 1; n <= 23; ++n) {
    const Interval term = n == 1 ? Interval(1) : rigor::cos(mul(t, rigor::log(Interval(n), w), w), w);
    sum = add(sum, div(term, Interval(n), w), w);
  }
  return rigor::round_out(sum, p);
}

std::vector<double> r23_zeros(double lo, double hi, double tol, double scan) {
  if (!(lo < hi) || !(tol > 0) || !(scan > 0)) throw std::invalid_argument("r23_zeros: bad range");
  std::vector<double> zeros;
  auto add_zero = [&](double z) {
    if (zeros.empty() || z - zeros.back() > tol) zeros.push_back(z);
  };
  double a = lo;
  double fa = r23_eval(a);
  const long steps = static_cast<long>(std::ceil((hi - lo) / scan));
  for (long i = 1; i <= steps; ++i) {
    const double b = std::min(hi, lo + i * scan);
    const double fb = r23_eval(b);
    if (fa == 0) {
      add_zero(a);
    } else if ((fa < 0) != (fb < 0) && fb != 0) {
      double x = a;
      double y = b;
      double fx = fa;
      while (y - x > 1e-15 * std::max(1.0, std::abs(x))) {
        const double mid = 0.5 * (x + y);
        if (mid <= x || mid >= y) break;
        const double fm = r23_eval(mid);
        if (fm == 0) {
          x = y = mid;
          break;
        }
        if ((fm < 0) == (fx < 0)) {
          x = mid;
          fx = fm;
        } else {
          y = mid;
        }
      }
      add_zero(std::abs(r23_eval(x)) <= std::abs(r23_eval(y)) ? x : y);
    }
    a = b;
    fa = fb;
  }
  if (fa == 0) add_zero(a);
  return zeros;
}

double log_q(int n, double x) {
  if (n < 1) throw std::invalid_argument("log_q needs n >= 1");
  // Q = 1 + (n+1)^x / S_n(x); scale every power by (n+1)^x to stay in range.
  double scaled = 0;
  for (int k = 1; k <= n; ++k) scaled += std::pow(static_cast<double>(k) / (n + 1), x);
  return std::log1p(1 / scaled);
}

bool grid_convex(const std::vector<double>& grid, const std::function<double(double)>& f, double tol) {
  if (grid.size() < 3) return true;
  const double step = grid[1] - grid[0];
  if (!(step > 0)) throw std::invalid_argument("grid must be increasing");
  for (std::size_t i = 2; i < grid.size(); ++i) {
    if (std::abs((grid[i] - grid[i - 1]) - step) > 1e-9 * step) throw std::invalid_argument("grid must be uniform");
  }
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    if (f(grid[i - 1]) - 2 * f(grid[i]) + f(grid[i + 1]) < -tol) return false;
  }
  return true;
}

bool q_logconvex_check(int n, const std::vector<double>& grid) {
  if (n < 2 || n > 10) throw std::invalid_argument("q_logconvex_check: n must lie in [2, 10]");
  return grid_convex(grid, [n](double x) { return log_q(n, x); });
}

std::vector<double> uniform_grid(double lo, double hi, double step) {
  if (!(step > 0) || hi < lo) throw std::invalid_argument("uniform_grid: bad range");
  std::vector<double> out;
  const long n = std::lround((hi - lo) / step);
  for (long i = 0; i <= n; ++i) out.push_back(lo + i * step);
  return out;
}

SeriesValue u_series(double r, double phi, int N) {
  if (r == 1) throw RadiusError("u_series: no geometric tail bound at r = 1; use the closed form");
  if (!(r > 0 && r < 1)) throw RadiusError("u_series: r must lie in (0, 1)");
  if (N < 1) throw std::invalid_argument("u_series: N must be positive");
  double sum = 0;
  double power = 1;
  for (int n = 1; n <= N; ++n) {
    power *= r;
    const double term = power * std::cos(n * phi) / (n + 2);
    sum += n % 2 == 1 ? term : -term;
  }
  return {sum, power * r / ((N + 3) * (1 - r))};
}

bool main_inequality_check(double r, double phi, int N) {
  const SeriesValue at_phi = u_series(r, phi, N);
  const SeriesValue at_zero = u_series(r, 0, N);
  return at_phi.value + at_phi.tail_bound < at_zero.value - at_zero.tail_bound;
}

}  // namespace msp::paperfns
