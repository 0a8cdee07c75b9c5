#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "msp/bernd/coefficients.hpp"

using namespace msp::bernd;
using msp::rigor::Dyadic;

namespace {

// Akiyama-Tanigawa: an independent route to the Bernoulli numbers.
std::vector<Rational> akiyama_tanigawa(int nmax) {
  std::vector<Rational> out;
  std::vector<Rational> a(nmax + 1);
  for (int m = 0; m <= nmax; ++m) {
    a[m] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) {
      a[j - 1] = j * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
    out.push_back(a[0]);  // B_m with B_1 = +1/2
  }
  return out;
}

// Direct double evaluation of h from its closed form.
double h_reference(double phi) {
  return std::log(2.0) - 1 + std::cos(phi) - phi / 2 * std::sin(2 * phi) -
         std::cos(2 * phi) * std::log(2 * std::cos(phi / 2));
}

}  // namespace

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  const auto at = akiyama_tanigawa(80);
  for (int n = 2; n <= 80; n += 2) CHECK(bernoulli(n) == at[n]);
  CHECK_THROWS_AS(bernoulli(3), std::invalid_argument);
  CHECK_THROWS_AS(bernoulli(0), std::invalid_argument);
}

TEST_CASE("linlog2 arithmetic and sign") {
  const LinLog2 x{Rational(1, 3), Rational(2)};
  const LinLog2 y{Rational(-1, 6), Rational(-1)};
  CHECK(x + y == LinLog2{Rational(1, 6), Rational(1)});
  CHECK(x - y == LinLog2{Rational(1, 2), Rational(3)});
  CHECK(x * Rational(3) == LinLog2{Rational(1), Rational(6)});
  CHECK(-x == LinLog2{Rational(-1, 3), Rational(-2)});
  CHECK(x.str() == "1/3 + 2*log2");
  CHECK(y.str() == "-1/6 - 1*log2");

  CHECK(linlog2_sign(LinLog2{}) == Sign::zero);
  CHECK(linlog2_sign(LinLog2{Rational(-177, 256), Rational(1)}) == Sign::positive);
  CHECK(linlog2_sign(LinLog2{Rational(89, 128), Rational(-1)}) == Sign::positive);
  CHECK(linlog2_sign(LinLog2{Rational(-89, 128), Rational(1)}) == Sign::negative);
  CHECK(linlog2_sign(LinLog2{Rational(-3), Rational(0)}) == Sign::negative);
  // 1385107/1998287 exceeds log 2 by about 2e-13.
  const LinLog2 close{Rational(-1385107, 1998287), Rational(1)};
  CHECK(linlog2_sign(close, msp::rigor::Precision(16)) == Sign::negative);
  CHECK(std::abs(LinLog2::log2().to_double() - 0.6931471805599453) < 1e-15);
}

TEST_CASE("coefficients: closed form and recurrence") {
  CHECK(d_closed(1) == LinLog2{Rational(-11, 16), Rational(1)});
  CHECK(d_closed(2) == LinLog2{Rational(89, 128), Rational(-1)});
  CHECK(d_recur(2) == LinLog2{Rational(89, 128), Rational(-1)});
  CHECK(std::abs(d_closed(1).to_double() - 0.00564718055995) < 1e-13);
  for (int k = 1; k <= 40; ++k) {
    const LinLog2 c = d_closed(k);
    CHECK(c == d_recur(k));
    CHECK(c.q == (k % 2 == 1 ? 1 : -1));
  }
  const CoeffTable t = build_coeff_table(40);
  REQUIRE(t.entries.size() == 40);
  for (const auto& [k, d] : t.entries) CHECK(d == d_closed(k));
  CHECK_THROWS_AS(d_closed(0), std::invalid_argument);
}

TEST_CASE("coefficient signs") {
  for (int k = 1; k <= 32; ++k) CHECK(linlog2_sign(d_closed(k)) == Sign::positive);
  for (int k = 33; k <= 64; ++k) CHECK(dk_asymptotic_check(k));
  // The chain only closes from 33 on.
  for (int k = 8; k <= 32; ++k) CHECK_FALSE(dk_asymptotic_check(k));
  CHECK_THROWS_AS(dk_asymptotic_check(7), std::invalid_argument);
  CHECK(dk_asymptotic_check(100));
}

TEST_CASE("extremes of the rational bounds") {
  const DkExtremes e32 = dk_extremes(32);
  CHECK(e32.max_r == Rational(177, 256));
  REQUIRE(e32.min_s.has_value());
  CHECK(*e32.min_s == Rational(89, 128));
  const DkExtremes e2 = dk_extremes(2);
  CHECK(e2.max_r == Rational(11, 16));
  CHECK(*e2.min_s == Rational(89, 128));
  const DkExtremes e1 = dk_extremes(1);
  CHECK(e1.max_r == Rational(11, 16));
  CHECK_FALSE(e1.min_s.has_value());
}

TEST_CASE("taylor series of h") {
  CHECK(h_taylor(0, 10) == 0);
  const double pi = std::acos(-1.0);
  CHECK(std::abs(h_taylor(pi / 2, 64) - (1.5 * std::log(2.0) - 1)) < 1e-10);
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    const double phi = -2 + 4.0 * (i + 0.5) / 200;
    worst = std::max(worst, std::abs(h_taylor(phi, 64) - h_reference(phi)));
  }
  CHECK(worst <= 1e-10);
  // Convexity of the partial sums on (0, 0.95 pi).
  const double step = 0.95 * pi / 400;
  for (int i = 1; i < 400; ++i) {
    const double x = i * step;
    const double second = h_taylor(x - step, 64) - 2 * h_taylor(x, 64) + h_taylor(x + step, 64);
    CHECK(second >= -1e-12);
  }
  CHECK_THROWS_AS(h_taylor(1, 0), std::invalid_argument);
}

TEST_CASE("even zeta values") {
  const msp::rigor::Precision p(96);
  for (int n = 1; n <= 20; ++n) CHECK(zeta_even_identity_check(n, p));
  const BernoulliSource negated = [](int n) { return n == 2 ? -bernoulli(2) : bernoulli(n); };
  CHECK_FALSE(zeta_even_identity_check(1, p, negated));
  CHECK(zeta_even_identity_check(2, p, negated));
  const BernoulliSource shifted = [](int n) { return bernoulli(n + 2); };
  CHECK_FALSE(zeta_even_identity_check(3, p, shifted));
}

TEST_CASE("mutated bernoulli numbers break the coefficient facts") {
  const BernoulliSource wrong = [](int n) { return n == 8 ? bernoulli(8) * 2 : bernoulli(n); };
  CHECK(d_closed(4, wrong) == d_recur(4, wrong));
  const DkExtremes e = dk_extremes(32, wrong);
  CHECK_FALSE((e.max_r == Rational(177, 256) && *e.min_s == Rational(89, 128)));
}
