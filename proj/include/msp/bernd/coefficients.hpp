#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "msp/bernd/bernoulli.hpp"
#include "msp/bernd/linlog2.hpp"

namespace msp::bernd {

/// Taylor coefficients of h(phi) = sum_k d_k (2 phi)^{2k} / (2k)!.
/// Closed form: (-1)^k (3/4 - log 2) + (-1)^{k+1} sum_{j<=k} (1 - 4^-j) B_{2j} / (2j).
LinLog2 d_closed(int k, const BernoulliSource& b = exact_bernoulli());

/// d_1 = log 2 - 11/16, d_{k+1} = -d_k + (-1)^k (1 - 2^{-2k-2}) B_{2k+2} / (2k+2).
LinLog2 d_recur(int k, const BernoulliSource& b = exact_bernoulli());

struct CoeffTable {
  std::vector<std::pair<int, LinLog2>> entries;  // k = 1..kmax
  std::vector<double> values;  // d_k as doubles, index k - 1
};

CoeffTable build_coeff_table(int kmax, const BernoulliSource& b = exact_bernoulli());

struct DkExtremes {
  Rational max_r;                 // d_k > 0  <=>  log 2 > r  (q = +1)
  std::optional<Rational> min_s;  // d_k > 0  <=>  log 2 < s  (q = -1)
};

/// Extremes of r and s over k = 1..kmax. kmax >= 1.
DkExtremes dk_extremes(int kmax, const BernoulliSource& b = exact_bernoulli());

/// Interval check, at this k, of the estimates that give d_k > 0 without exact
/// evaluation: the last term of sum_{j<k} (2j-1)!/(2pi)^{2j} dominates,
/// zeta(2) (2k-2)!/(2pi)^{2k-2} > 3/4 - log 2, and
/// 2^16/(2^16-1) (2pi)^2 zeta(2) < 2k - 1. Requires k >= 8.
bool dk_asymptotic_check(int k, Precision p = Precision(128));

/// Partial sum of the Taylor series of h with K terms, in double. 1 <= K <= 128.
double h_taylor(double phi, int K);

/// Interval form of zeta(2n) = (-1)^{n+1} (2pi)^{2n} B_{2n} / (2 (2n)!)
/// intersected with sum_{m<=M} m^{-2n} plus its integral tail bounds. 1 <= n <= 20.
bool zeta_even_identity_check(int n, Precision p, const BernoulliSource& b = exact_bernoulli());

}  // namespace msp::bernd
