#include "msp/bernd/coefficients.hpp"

#include <stdexcept>

#include "msp/rigor/elementary.hpp"

namespace msp::bernd {

namespace {

using rigor::Dyadic;

int parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

void require_k(int k) {
  if (k < 1) throw std::invalid_argument("coefficient index must be >= 1");
}

// (1 - 4^-j) B_{2j} / (2j)
Rational bernoulli_term(int j, const BernoulliSource& b) {
  const mpz_class four_j = mpz_class(1) << (2 * j);
  Rational t = Rational(four_j - 1, four_j) * b(2 * j) / (2 * j);
  t.canonicalize();
  return t;
}

mpz_class factorial(unsigned long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

constexpr int kTaylorMax = 128;

}  // namespace

LinLog2 d_closed(int k, const BernoulliSource& b) {
  require_k(k);
  Rational sum(0);
  for (int j = 1; j <= k; ++j) sum += bernoulli_term(j, b);
  const int s = parity_sign(k);
  LinLog2 d{Rational(3, 4) - sum, Rational(-1)};
  d *= Rational(s);
  d.p.canonicalize();
  return d;
}

LinLog2 d_recur(int k, const BernoulliSource& b) {
  require_k(k);
  LinLog2 d{Rational(-11, 16), Rational(1)};
  for (int j = 1; j < k; ++j) {
    d = -d + LinLog2{bernoulli_term(j + 1, b) * parity_sign(j), Rational(0)};
    d.p.canonicalize();
  }
  return d;
}

CoeffTable build_coeff_table(int kmax, const BernoulliSource& b) {
  require_k(kmax);
  CoeffTable table;
  LinLog2 d = d_recur(1, b);
  for (int k = 1; k <= kmax; ++k) {
    if (k > 1) {
      d = -d + LinLog2{bernoulli_term(k, b) * parity_sign(k - 1), Rational(0)};
      d.p.canonicalize();
    }
    table.entries.emplace_back(k, d);
    table.values.push_back(d.to_double());
  }
  return table;
}

DkExtremes dk_extremes(int kmax, const BernoulliSource& b) {
  const CoeffTable table = build_coeff_table(kmax, b);
  std::optional<Rational> max_r;
  std::optional<Rational> min_s;
  for (const auto& [k, d] : table.entries) {
    if (d.q == 1) {
      if (!max_r || -d.p > *max_r) max_r = -d.p;
    } else if (d.q == -1) {
      if (!min_s || d.p < *min_s) min_s = d.p;
    } else {
      throw std::logic_error("log 2 coefficient of d_" + std::to_string(k) + " is not +-1");
    }
  }
  return {*max_r, min_s};
}

bool dk_asymptotic_check(int k, Precision p) {
  if (k < 8) throw std::invalid_argument("dk_asymptotic_check needs k >= 8");
  using rigor::div;
  using rigor::mul;
  using rigor::pow;
  const Interval two_pi = rigor::ldexp(rigor::pi_enclosure(p), 1);
  const Interval zeta2 = div(sqr(rigor::pi_enclosure(p), p), Interval(6), p);
  auto term = [&](int j) {  // (2j-1)! / (2pi)^{2j}
    return div(Interval::enclose(Rational(factorial(2 * j - 1)), p), pow(two_pi, 2 * j, p), p);
  };

  const Interval last = term(k - 1);
  for (int j = 1; j < k - 1; ++j) {
    if (!(term(j).hi() <= last.lo())) return false;
  }
  const Interval gap = rigor::sub(Interval::enclose(Rational(3, 4), p), rigor::log2_enclosure(p), p);
  const Interval partial =
      mul(zeta2, div(Interval::enclose(Rational(factorial(2 * k - 2)), p), pow(two_pi, 2 * k - 2, p), p), p);
  if (!(partial.lo() > gap.hi())) return false;

  const Interval factor = Interval::enclose(Rational(65536, 65535), p);
  const Interval lhs = mul(factor, mul(sqr(two_pi, p), zeta2, p), p);
  return lhs.hi() < Dyadic(2L * k - 1);
}

double h_taylor(double phi, int K) {
  if (K < 1 || K > kTaylorMax) throw std::invalid_argument("h_taylor: K must lie in [1, 128]");
  static const CoeffTable table = build_coeff_table(kTaylorMax);
  const double x2 = 4 * phi * phi;
  double power = 1;  // (2 phi)^{2k} / (2k)!
  double sum = 0;
  for (int k = 1; k <= K; ++k) {
    power *= x2 / ((2.0 * k - 1) * (2.0 * k));
    sum += table.values[k - 1] * power;
  }
  return sum;
}

bool zeta_even_identity_check(int n, Precision p, const BernoulliSource& b) {
  if (n < 1 || n > 20) throw std::invalid_argument("zeta_even_identity_check: n must lie in [1, 20]");
  const int two_n = 2 * n;
  Interval rhs = rigor::pow(rigor::ldexp(rigor::pi_enclosure(p), 1), two_n, p);
  Rational scale = b(two_n) / (2 * Rational(factorial(two_n)));
  if (n % 2 == 0) scale = -scale;
  rhs = rigor::mul(rhs, Interval::enclose(scale, p), p);

  constexpr long terms = 1000;
  Interval direct(0);
  for (long m = 1; m <= terms; ++m) {
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), m, two_n);
    direct = rigor::add(direct, Interval::enclose(Rational(mpz_class(1), power), p), p);
  }
  // int_{M+1}^inf x^{-2n} <= sum_{m>M} m^{-2n} <= int_M^inf x^{-2n}
  auto tail = [&](long from) {
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), from, two_n - 1);
    return Rational(mpz_class(1), power * (two_n - 1));
  };
  const Interval tails(rigor::round_dir(tail(terms + 1), p, rigor::Rounding::down),
                       rigor::round_dir(tail(terms), p, rigor::Rounding::up));
  direct = rigor::add(direct, tails, p);
  return rhs.overlaps(direct);
}

}  // namespace msp::bernd
