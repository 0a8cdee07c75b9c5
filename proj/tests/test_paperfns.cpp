#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "msp/paperfns/gallery.hpp"
#include "msp/paperfns/lemmas.hpp"
#include "msp/paperfns/registry.hpp"

using namespace msp::paperfns;
using msp::bernd::Sign;
using msp::bernd::linlog2_sign;
namespace engine = msp::engine;

namespace {

const Precision p64(64);

bool near(const Interval& x, double value, double tol) {
  return x.lo() <= Dyadic::from_double(value + tol) && x.hi() >= Dyadic::from_double(value - tol);
}

Interval at(double x) { return Interval(Dyadic::from_double(x)); }
double mid(const Interval& x) { return x.mid_double(); }

// Boundary value of the series: Re[(log(1+z) - z + z^2/2) / z^2] at z = r e^{i phi}.
double series_closed(double r, double phi) {
  const std::complex<double> z = std::polar(r, phi);
  return std::real((std::log(1.0 + z) - z + z * z / 2.0) / (z * z));
}

const double kPi = std::acos(-1.0);
const double kLog2 = std::log(2.0);

}  // namespace

TEST_CASE("u and h closed forms") {
  CHECK(near(u_closed(Interval(0), p64), kLog2 - 0.5, 1e-15));
  CHECK(near(h_closed(Interval(0), p64), 0, 1e-17));
  const Interval half_pi = msp::rigor::ldexp(msp::rigor::pi_enclosure(p64), -1);
  CHECK(near(u_closed(half_pi, p64), 0.5 - kLog2 / 2, 1e-15));
  CHECK(near(h_closed(half_pi, p64), 1.5 * kLog2 - 1, 1e-15));
  CHECK(u_closed(Interval(0), p64).width() < Dyadic(1).ldexp(-58));

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> phi_dist(-3.1, 3.1);
  for (int i = 0; i < 100; ++i) {
    const double phi = phi_dist(rng);
    const Interval u = u_closed(at(phi), p64);
    const Interval h = h_closed(at(phi), p64);
    CHECK(u.overlaps(u_closed(at(-phi), p64)));
    CHECK(h.overlaps(h_closed(at(-phi), p64)));
    CHECK(near(msp::rigor::add(u, h, p64), kLog2 - 0.5, 1e-15));
    CHECK(std::abs(mid(u) - series_closed(1.0, phi)) < 1e-12);
    CHECK(std::abs(mid(u) - u_value(phi)) < 1e-12);
  }
  CHECK_THROWS_AS(u_closed(at(3.2), p64), DomainError);
  CHECK_THROWS_AS(h_closed(Interval(Dyadic(3), Dyadic(4)), p64), DomainError);
}

TEST_CASE("derivative of h") {
  CHECK(hprime_closed(Interval(0), p64).contains(Dyadic(0)));
  const double delta = 1e-6;
  double worst = 0;
  for (int i = 0; i <= 290; ++i) {
    const double phi = 0.1 + 0.01 * i;
    const double fd = (mid(h_closed(at(phi + delta), p64)) - mid(h_closed(at(phi - delta), p64))) / (2 * delta);
    worst = std::max(worst, std::abs(mid(hprime_closed(at(phi), p64)) - fd));
    CHECK(std::abs(hprime_value(phi) - mid(hprime_closed(at(phi), p64))) < 1e-11);
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("differential equation for u") {
  const double step = 1e-4;
  for (int i = 0; i < 100; ++i) {
    const double phi = 0.1 + 2.9 * i / 99;
    auto u = [](double x) { return mid(u_closed(at(x), Precision(96))); };
    const double second = (-u(phi + 2 * step) + 16 * u(phi + step) - 30 * u(phi) + 16 * u(phi - step) -
                           u(phi - 2 * step)) /
                          (12 * step * step);
    const double rhs = 1 - 1 / (2 * (1 + std::cos(phi)));
    CHECK(std::abs(second + 4 * u(phi) - rhs) <= 1e-6);

    // 1 - (1/2) d/dphi tan(phi/2) = 1 - 1/(4 cos^2(phi/2)) against 1 - 1/(2 (1 + cos phi)).
    const Interval c = msp::rigor::cos(at(phi / 2), p64);
    const Interval left = msp::rigor::sub(Interval(1), msp::rigor::inv(msp::rigor::ldexp(sqr(c, p64), 2), p64), p64);
    const Interval one_plus = msp::rigor::add(Interval(1), msp::rigor::cos(at(phi), p64), p64);
    const Interval right = msp::rigor::sub(Interval(1), msp::rigor::inv(msp::rigor::ldexp(one_plus, 1), p64), p64);
    CHECK(std::abs(mid(left) - mid(right)) <= 1e-10);
  }
}

TEST_CASE("polynomial bound near zero") {
  const PolyLinLog2 p = p_poly();
  CHECK(p.degree() == 8);
  CHECK(p_eval(Rational(0)) == LinLog2{Rational(-31680), Rational(46080)});
  CHECK(linlog2_sign(p_eval(Rational(0))) == Sign::positive);
  CHECK(std::abs(p_eval(Rational(0)).to_double() - 260.222080202) < 1e-8);
  CHECK(std::abs(p_eval(Rational(1, 3)).to_double() - 86.0212494562) < 1e-8);
  CHECK(linlog2_sign(p_eval(Rational(1, 3))) == Sign::positive);
  CHECK(linlog2_sign(p_eval(Rational(39, 100))) == Sign::positive);
  CHECK(linlog2_sign(p_eval(Rational(40, 100))) == Sign::negative);
  CHECK(p.enclose(Interval(Dyadic(1).ldexp(-1)), p64).overlaps(p_eval(Rational(1, 2)).enclose(p64)));

  const Dyadic tol = Dyadic(1).ldexp(-30);
  const auto roots = p_roots(Dyadic(0), Dyadic(10), tol);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].width() <= tol);
  CHECK(near(roots[0], 0.392976068986, 1e-9));
  CHECK(near(roots[1], 7.78293660632, 1e-9));
  const auto all = p_roots(Dyadic(-10), Dyadic(10), tol);
  REQUIRE(all.size() == 4);
  CHECK(near(all[0], -7.78293660632, 1e-9));
  CHECK(near(all[1], -0.392976068986, 1e-9));

  const auto den = poly_roots(denominator_poly(), Dyadic(-10), Dyadic(10), tol);
  REQUIRE(den.size() == 2);
  CHECK(near(den[0], -7.78849186683, 1e-9));
  CHECK(near(den[1], 7.78849186683, 1e-9));
  CHECK(denominator_poly().eval(Rational(1, 3)) == LinLog2{Rational(626390, 27), Rational(0)});

  // Exact zero on the grid: x^2 - 1 at +-1.
  const PolyLinLog2 square{{LinLog2{Rational(-1), Rational(0)}, LinLog2{}, LinLog2{Rational(1), Rational(0)}}};
  const auto unit = poly_roots(square, Dyadic(-2), Dyadic(2), tol, 8);
  REQUIRE(unit.size() == 2);
  CHECK(unit[0] == Interval(Dyadic(-1)));
  CHECK(unit[1] == Interval(Dyadic(1)));
  CHECK(poly_roots(square, Dyadic(2), Dyadic(3), tol).empty());
  CHECK_THROWS_AS(poly_roots(square, Dyadic(2), Dyadic(3), tol, 6), std::invalid_argument);

  const Lemma1Result l1 = lemma1_check();
  CHECK(l1.p_at_zero == Sign::positive);
  CHECK(l1.p_at_third == Sign::positive);
  CHECK(l1.p_positive);
  CHECK(l1.denominator_positive);
  CHECK(l1.ok);
  CHECK_FALSE(poly_positive_on(p, Dyadic(0), Dyadic(1), p64));
}

TEST_CASE("polynomial bound lies below h") {
  // h(phi) > phi^2 p(phi) / (23040 + 1440 phi^2 - 30 phi^4) on (0, 1/3].
  for (int i = 1; i <= 50; ++i) {
    const double phi = i / 150.0;
    const Rational x(i, 150);
    const double bound = phi * phi * p_eval(x).to_double() / denominator_poly().eval(x).to_double();
    CHECK(h_value(phi) > bound);
    CHECK(bound > 0);
  }
}

TEST_CASE("lower bound near pi") {
  const Interval c = lemma2_check(p64);
  CHECK(near(c, 0.570891213826087, 1e-14));
  CHECK(c.lo() > Dyadic::from_double(0.5708));
  CHECK(c.width() <= Dyadic::from_double(2e-6));
  CHECK(lemma2_hypotheses(p64));
  // The constant is a lower bound for h on [3, pi).
  for (int i = 0; i < 40; ++i) {
    const double phi = 3 + (kPi - 3) * i / 40;
    CHECK(h_value(phi) > 0.570891);
  }
}

TEST_CASE("slope bound on the middle range") {
  const Lemma3Chain c = lemma3_chain_check(p64);
  CHECK(c.ok);
  CHECK(near(c.two_cos, 0.141474403335, 1e-11));
  CHECK(near(c.log_part, 10.194458254, 1e-8));
  CHECK(near(c.inv_part, 7.06841645148, 1e-10));
  CHECK(c.bound.hi() < Dyadic(20));

  const auto& reg = paper_registry();
  const Dyadic third = h_run_start();
  CHECK(engine::bound_sup_abs(reg.at("hprime"), third, Dyadic(3), Dyadic(20), p64, 30).status ==
        engine::SupStatus::proved);
  CHECK(engine::bound_sup_abs(reg.at("hprime"), third, Dyadic(3), Dyadic(3), p64, 12).status !=
        engine::SupStatus::proved);
  double sup = 0;
  for (int i = 0; i <= 2000; ++i) sup = std::max(sup, std::abs(hprime_value(1.0 / 3 + (3 - 1.0 / 3) * i / 2000)));
  CHECK(sup < 20);
}

TEST_CASE("certificate for h on [1/3, 3]") {
  const auto& reg = paper_registry();
  const Dyadic a = h_run_start();
  CHECK(a.to_rational() < Rational(1, 3));
  CHECK(a == Dyadic(mpz_class(21845), -16));
  const engine::SlopeBound slope = engine::SlopeBound::constant(h_slope());
  const engine::Certificate cert = engine::msp_certify(reg.at("h"), a, Dyadic(3), slope, p64);
  CHECK(cert.points.size() >= 3747);
  CHECK(cert.points.size() <= 4579);
  CHECK(engine::msp_verify(cert, reg).valid);
  CHECK(engine::coverage_holds(cert));

  const engine::Certificate sharded = engine::msp_certify_sharded(reg.at("h"), a, Dyadic(3), slope, p64, Rational(1), 4);
  CHECK(engine::msp_verify(sharded, reg).valid);
  const double ratio = static_cast<double>(sharded.points.size()) / static_cast<double>(cert.points.size());
  CHECK(std::abs(ratio - 1) <= 0.05);

  // Dense sampling never finds a non-positive value on the certified range.
  int bad = 0;
  for (int i = 0; i < 10'000; ++i) {
    const double phi = 1.0 / 3 + (3 - 1.0 / 3) * i / 9999;
    if (!(h_value(phi) > 0)) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("flett function") {
  CHECK(near(flett_eval(at(0.001), 64, p64), 0.00164493388646, 1e-13));
  CHECK(near(flett_eval(Interval(48), 2000, p64), 0.17080096, 1e-8));
  for (double t : {0.5, 5.0, 20.0, 48.0}) {
    const Interval coarse = flett_eval(at(t), static_cast<long>(std::ceil(t)), p64);
    const Interval fine = flett_eval(at(t), 1500, p64);
    CHECK(coarse.overlaps(fine));
    CHECK(fine.width() < coarse.width());
  }
  CHECK_THROWS_AS(flett_eval(Interval(10), 5, p64), std::invalid_argument);
  CHECK_THROWS_AS(flett_eval(Interval(-1), 5, p64), std::invalid_argument);

  const Interval zero = flett_first_zero(Dyadic(1).ldexp(-20));
  CHECK(zero.width() <= Dyadic(1).ldexp(-20));
  CHECK(near(zero, 48.4184536114, 1e-6));
  CHECK(flett_eval(Interval(zero.lo()), 1024, p64).positive());
  CHECK(flett_eval(Interval(zero.hi()), 1024, p64).negative());

  const Dyadic m = flett_slope();
  CHECK(msp::rigor::compare(m, Rational(165, 100)) >= 0);
  CHECK(msp::rigor::compare(m, Rational(16501, 10000)) < 0);
  const auto& reg = paper_registry();
  const engine::Certificate cert = engine::msp_certify(reg.at("flett"), Dyadic(1).ldexp(-10), Dyadic(48),
                                                       engine::SlopeBound::constant(m), p64);
  CHECK(engine::msp_verify(cert, reg).valid);
}

TEST_CASE("R_23") {
  double h23 = 0;
  for (int n = 1; n <= 23; ++n) h23 += 1.0 / n;
  CHECK(std::abs(r23_eval(0) - h23) < 1e-14);
  CHECK(std::abs(r23_eval(0) - 3.73429151109) < 1e-10);
  const double tol = 1e-9;
  // Only two sign changes on [0, 200]; the sum stays above -0.1.
  const auto zeros = r23_zeros(0, 200, tol);
  REQUIRE(zeros.size() == 2);
  CHECK(std::abs(zeros[0] - 1.2567387026) < 1e-8);
  CHECK(std::abs(zeros[1] - 1.5993251796) < 1e-8);
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    CHECK(std::abs(r23_eval(zeros[i])) <= 1e-10);
    if (i > 0) CHECK(zeros[i] - zeros[i - 1] > tol);
  }
  for (double t : {0.0, 1.5, 14.1, 33.3}) CHECK(near(r23_enclose(at(t), p64), r23_eval(t), 1e-13));
}

TEST_CASE("log-convexity of Q") {
  for (int n = 2; n <= 10; ++n) CHECK(std::abs(log_q(n, 0) - std::log((n + 1.0) / n)) < 1e-15);
  const auto grid = uniform_grid(-50, 50, 0.25);
  CHECK(grid.size() == 401);
  for (int n = 2; n <= 10; ++n) CHECK(q_logconvex_check(n, grid));
  CHECK_FALSE(grid_convex(grid, [](double x) { return -log_q(2, x); }));
  CHECK_THROWS_AS(q_logconvex_check(11, grid), std::invalid_argument);
  CHECK_THROWS_AS(grid_convex({0.0, 1.0, 3.0}, [](double x) { return x; }), std::invalid_argument);
}

TEST_CASE("series form of the main inequality") {
  const SeriesValue s = u_series(0.5, 0, 60);
  const double closed = (std::log(1.5) - 0.5 + 0.125) / 0.25;
  CHECK(std::abs(s.value - closed) <= s.tail_bound + 1e-15);
  CHECK(s.tail_bound < 1e-19);
  for (double r : {0.3, 0.7, 0.95}) {
    for (double phi : {kPi / 2, 1.0, 2.5}) {
      const SeriesValue v = u_series(r, phi, 400);
      CHECK(std::abs(v.value - series_closed(r, phi)) <= v.tail_bound + 1e-14);
    }
  }
  CHECK(u_series(0.883, 0, 300).value > u_series(0.883, 2.0, 300).value);
  CHECK_THROWS_AS(u_series(1, 0.5, 10), RadiusError);
  CHECK_THROWS_AS(u_series(1.5, 0.5, 10), RadiusError);

  std::vector<double> radii;
  for (int i = 1; i <= 9; ++i) radii.push_back(i / 10.0);
  radii.push_back(8.0 / 9);
  radii.push_back(0.883);
  for (double r : radii) {
    for (int j = 1; j <= 31; ++j) CHECK(main_inequality_check(r, j / 10.0, 400));
  }
}

TEST_CASE("registry") {
  const auto& reg = paper_registry();
  for (const char* name : {"h", "hprime", "u", "p_lemma1", "flett", "r23"}) CHECK(reg.contains(name));
  CHECK(reg.names().size() == 6);
  CHECK(near(reg.at("p_lemma1").eval(Interval(0), p64), 260.222080202, 1e-8));
  CHECK(near(reg.at("u").eval(Interval(0), p64), kLog2 - 0.5, 1e-15));
}
