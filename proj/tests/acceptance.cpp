// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <string>

#include "msp/bernd/coefficients.hpp"
#include "msp/cli/report.hpp"
#include "msp/cli/run.hpp"
#include "msp/engine/certify.hpp"
#include "msp/harmonic/poisson.hpp"
#include "msp/harmonic/rearrangement.hpp"
#include "msp/paperfns/closed_forms.hpp"
#include "msp/paperfns/gallery.hpp"
#include "msp/paperfns/lemmas.hpp"
#include "msp/paperfns/registry.hpp"

namespace {

using namespace msp;
using msp::cli::fmt;
using rigor::Dyadic;
using rigor::Interval;
using rigor::Precision;
using rigor::Rational;

const Precision kPrec(64);
const double kPi = std::numbers::pi;
const double kLog2 = std::numbers::ln2;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int n, const std::string& name, const std::function<Outcome()>& body) {
  Outcome o{false, ""};
  const auto start = std::chrono::steady_clock::now();
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("error: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("%s  criterion %d (%s): %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", n, name.c_str(), o.detail.c_str(),
              secs);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

bool inside(const Interval& x, double lo, double hi) {
  return Dyadic::from_double(lo) <= x.lo() && x.hi() <= Dyadic::from_double(hi);
}

Interval point(double x) { return Interval(Dyadic::from_double(x)); }

std::vector<double> radii() {
  std::vector<double> r;
  for (int i = 1; i <= 9; ++i) r.push_back(i / 10.0);
  r.push_back(8.0 / 9);
  r.push_back(0.883);
  return r;
}

std::vector<double> angles() {
  std::vector<double> phi;
  for (int j = 1; j <= 31; ++j) phi.push_back(j / 10.0);
  return phi;
}

std::optional<engine::Certificate> h_certificate;

Outcome msp_reproduction() {
  const auto& reg = paperfns::paper_registry();
  const auto start = std::chrono::steady_clock::now();
  const Dyadic a = paperfns::h_run_start();
  const auto cert = engine::msp_certify(reg.at("h"), a, Dyadic(3), engine::SlopeBound::constant(Dyadic(20)), kPrec,
                                        Rational(1));
  const auto verdict = engine::msp_verify(cert, reg);
  const double secs = seconds_since(start);
  const double n = static_cast<double>(cert.points.size());
  h_certificate = cert;
  return {rigor::compare(a, Rational(1, 3)) <= 0 && verdict.valid && std::abs(n - 4163) <= 0.1 * 4163 && secs <= 60,
          "a = " + a.str() + ", " + std::to_string(cert.points.size()) + " points, verifier " + verdict.reason +
              ", " + fmt(secs) + " s"};
}

Outcome coefficients() {
  bool same = true;
  for (int k = 1; k <= 40; ++k) same = same && bernd::d_closed(k) == bernd::d_recur(k);
  int positive = 0;
  for (int k = 1; k <= 32; ++k) positive += bernd::linlog2_sign(bernd::d_closed(k)) == bernd::Sign::positive;
  const auto ex = bernd::dk_extremes(32);
  const bool extremes = ex.max_r == Rational(177, 256) && ex.min_s && *ex.min_s == Rational(89, 128);
  bool tail = true;
  for (int k = 33; k <= 64; ++k) tail = tail && bernd::dk_asymptotic_check(k);
  return {same && positive == 32 && extremes && tail,
          std::string("closed = recurrence: ") + (same ? "yes" : "no") + ", positive " + std::to_string(positive) +
              "/32, max r = " + rigor::format_rational(ex.max_r) + ", min s = " +
              (ex.min_s ? rigor::format_rational(*ex.min_s) : "none") + ", k = 33..64: " + (tail ? "yes" : "no")};
}

Outcome lemma1() {
  const Dyadic tol = Dyadic(1).ldexp(-30);
  const auto roots = paperfns::p_roots(Dyadic(0), Dyadic(10), tol);
  const auto den = paperfns::poly_roots(paperfns::denominator_poly(), Dyadic(-10), Dyadic(10), tol);
  const bool r_ok = roots.size() == 2 && inside(roots[0], 0.392976 - 1e-6, 0.392976 + 1e-6) &&
                    inside(roots[1], 7.78294 - 1e-5, 7.78294 + 1e-5);
  const bool d_ok = den.size() == 2 && inside(den[0], -7.78849 - 1e-5, -7.78849 + 1e-5) &&
                    inside(den[1], 7.78849 - 1e-5, 7.78849 + 1e-5);
  const bool l1 = paperfns::lemma1_check().ok;
  std::string detail = "roots";
  for (const auto& r : roots) detail += " " + fmt(r.mid_double());
  detail += ", denominator roots";
  for (const auto& r : den) detail += " " + fmt(r.mid_double());
  return {r_ok && d_ok && l1, detail + ", lemma1_check " + (l1 ? "true" : "false")};
}

Outcome lemma2() {
  const Interval c = paperfns::lemma2_check(kPrec);
  const bool ok = c.lo().sign() > 0 && c.width() <= Dyadic::from_double(2e-6) &&
                  inside(c, 0.570891 - 1e-6, 0.570891 + 1e-6);
  return {ok, "enclosure " + c.str() + " ~ " + fmt(c.mid_double()) + ", width " + fmt(c.width().to_double())};
}

Outcome lemma3() {
  const auto chain = paperfns::lemma3_chain_check(kPrec);
  const auto sup = engine::bound_sup_abs(paperfns::paper_registry().at("hprime"), paperfns::h_run_start(), Dyadic(3),
                                         Dyadic(20), kPrec, 30);
  const double delta = 1e-6;
  double worst = 0;
  for (int i = 0; i <= 290; ++i) {
    const double phi = 0.1 + 0.01 * i;
    const double fd = (paperfns::h_closed(point(phi + delta), kPrec).mid_double() -
                       paperfns::h_closed(point(phi - delta), kPrec).mid_double()) /
                      (2 * delta);
    worst = std::max(worst, std::abs(paperfns::hprime_closed(point(phi), kPrec).mid_double() - fd));
  }
  const bool proved = sup.status == engine::SupStatus::proved;
  return {chain.ok && proved && worst <= 1e-8, std::string("chain bound ") + fmt(chain.bound.hi().to_double()) +
                                                   ", sup bound " + (proved ? "proved" : "not proved") +
                                                   ", finite-difference error " + fmt(worst)};
}

Outcome ode() {
  const double step = 1e-4;
  auto u = [](double x) { return paperfns::u_closed(point(x), Precision(96)).mid_double(); };
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const double phi = 0.1 + 2.9 * i / 99;
    const double second =
        (-u(phi + 2 * step) + 16 * u(phi + step) - 30 * u(phi) + 16 * u(phi - step) - u(phi - 2 * step)) /
        (12 * step * step);
    worst = std::max(worst, std::abs(second + 4 * u(phi) - (1 - 1 / (2 * (1 + std::cos(phi))))));
  }
  return {worst <= 1e-6, "max residual " + fmt(worst) + " over 100 points"};
}

Outcome taylor() {
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    const double phi = -2 + 4.0 * i / 199;
    worst = std::max(worst, std::abs(bernd::h_taylor(phi, 64) - paperfns::h_closed(point(phi), kPrec).mid_double()));
  }
  const double at_half_pi = std::abs(bernd::h_taylor(kPi / 2, 64) - (1.5 * kLog2 - 1));
  return {worst <= 1e-10 && at_half_pi <= 1e-10,
          "max difference " + fmt(worst) + ", at pi/2 " + fmt(at_half_pi)};
}

Outcome poisson() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0;
  for (double r : {0.5, 8.0 / 9, 0.883}) {
    for (int j = 0; j < 20; ++j) {
      const double phi = -3.0 + 6.0 * j / 19;
      worst = std::max(worst, std::abs(harmonic::U_poisson(r, phi, 4096) - harmonic::U_direct(r, phi)));
    }
  }
  const double secs = seconds_since(start);
  return {worst <= 1e-6 && secs <= 30, "max difference " + fmt(worst) + " at n_quad = 4096, " + fmt(secs) + " s"};
}

Outcome scan() {
  const auto report = harmonic::theorem_scan(radii(), angles());
  const double D = harmonic::strict_gap_D(0.5, 2.0, 0.3, 0.1);
  return {report.violations.empty() && D > 0,
          std::to_string(report.pairs) + " pairs, " + std::to_string(report.violations.size()) +
              " violations, min margin " + fmt(report.minimum.margin) + ", D = " + fmt(D)};
}

Outcome main_inequality() {
  int failed = 0, pairs = 0;
  for (double r : radii()) {
    for (double phi : angles()) {
      ++pairs;
      if (!paperfns::main_inequality_check(r, phi, 400)) ++failed;
    }
  }
  // r = 1: (0, 1/3] by the polynomial bound, [a, 3] with a <= 1/3 by the certificate, [3, pi) by the constant.
  const bool l1 = paperfns::lemma1_check().ok;
  const bool l2 = paperfns::lemma2_check(kPrec).lo().sign() > 0 && paperfns::lemma2_hypotheses(kPrec);
  bool cert = false;
  if (h_certificate) {
    cert = rigor::compare(h_certificate->a, Rational(1, 3)) <= 0 && h_certificate->b == Dyadic(3) &&
           engine::coverage_holds(*h_certificate);
  }
  return {failed == 0 && l1 && l2 && cert, std::to_string(pairs) + " pairs with r < 1, " + std::to_string(failed) +
                                               " failures; r = 1 coverage: lemma1_check " + (l1 ? "ok" : "no") +
                                               ", certificate " + (cert ? "ok" : "no") + ", lemma2_check " +
                                               (l2 ? "ok" : "no")};
}

Outcome gallery() {
  const Interval zero = paperfns::flett_first_zero(Dyadic(1).ldexp(-24));
  const bool zero_ok = inside(zero, 48.418454 - 1e-5, 48.418454 + 1e-5);
  const Dyadic m = paperfns::flett_slope();
  const auto& reg = paperfns::paper_registry();
  const auto cert = engine::msp_certify(reg.at("flett"), Dyadic(1).ldexp(-10), Dyadic(48),
                                        engine::SlopeBound::constant(m), kPrec);
  const bool cert_ok = rigor::compare(m, Rational(165, 100)) >= 0 && engine::msp_verify(cert, reg).valid;
  const auto grid = paperfns::uniform_grid(-50, 50, 0.25);
  bool convex = true;
  for (int n = 2; n <= 10; ++n) convex = convex && paperfns::q_logconvex_check(n, grid);
  const auto zeros = paperfns::r23_zeros(0, 200, 1e-12);
  double residual = 0;
  for (double z : zeros) residual = std::max(residual, std::abs(paperfns::r23_eval(z)));
  return {zero_ok && cert_ok && convex && !zeros.empty() && residual <= 1e-10,
          "Flett zero " + fmt(zero.mid_double()) + ", certificate " + std::to_string(cert.points.size()) +
              " points " + (cert_ok ? "VALID" : "INVALID") + ", Q log-convex " + (convex ? "yes" : "no") + ", " +
              std::to_string(zeros.size()) + " R_23 zeros, residual " + fmt(residual)};
}

Outcome rearrangement() {
  const harmonic::CircleGrid g6{{0, 0, 1, 2, 1, 0}, {2, 2, 1, 0, 1, 2}};
  const auto all = harmonic::rearrangement_exhaustive(g6);
  const auto random = harmonic::rearrangement_random(64, 10'000, 20240601);
  return {all.trials == 720 && all.violations == 0 && random.trials == 10'000 && random.violations == 0,
          std::to_string(all.trials) + " permutations with " + std::to_string(all.violations) + " violations, " +
              std::to_string(random.trials) + " random trials with " + std::to_string(random.violations)};
}

bool contains(const Interval& x, const Rational& q) { return x.lo().to_rational() <= q && q <= x.hi().to_rational(); }

Outcome infrastructure() {
  bool round_trip = false;
  if (h_certificate) {
    const std::string text = engine::to_text(*h_certificate);
    const auto back = engine::from_text(text);
    round_trip = back == *h_certificate && engine::to_text(back) == text;
  }

  // Containment against exact rational arithmetic.
  std::mt19937_64 rng(977);
  std::uniform_int_distribution<long> mant(-1'000'000, 1'000'000);
  std::uniform_int_distribution<int> expo(-40, 10), op_pick(0, 3), bits(16, 80);
  std::uniform_int_distribution<long> frac(0, 1'000'000);
  auto random_interval = [&] {
    Dyadic a(mant(rng), expo(rng)), b(mant(rng), expo(rng));
    return a < b ? Interval(a, b) : Interval(b, a);
  };
  auto inner = [&](const Interval& x) {
    const Rational t(frac(rng), 1'000'000);
    Rational q = x.lo().to_rational() + t * (x.hi().to_rational() - x.lo().to_rational());
    q.canonicalize();
    return q;
  };
  int violations = 0, cases = 0;
  while (cases < 10'000) {
    const Interval x = random_interval();
    const Interval y = random_interval();
    const int op = op_pick(rng);
    if (op == 3 && y.contains(Dyadic(0))) continue;
    const Precision p(bits(rng));
    const Rational a = inner(x), b = inner(y);
    ++cases;
    switch (op) {
      case 0: violations += !contains(rigor::add(x, y, p), a + b); break;
      case 1: violations += !contains(rigor::sub(x, y, p), a - b); break;
      case 2: violations += !contains(rigor::mul(x, y, p), a * b); break;
      default: violations += !contains(rigor::div(x, y, p), a / b); break;
    }
  }
  const cli::Report report = cli::report_bundle({1});
  return {round_trip && violations == 0 && report.passed(),
          std::string("round trip ") + (round_trip ? "byte-exact" : "broken") + ", " + std::to_string(cases) +
              " containment cases with " + std::to_string(violations) + " violations, report " +
              (report.passed() ? "PASS" : "FAIL")};
}

}  // namespace

int main() {
  criterion(1, "MSP reproduction", msp_reproduction);
  criterion(2, "coefficient suite", coefficients);
  criterion(3, "polynomial roots", lemma1);
  criterion(4, "constant near pi", lemma2);
  criterion(5, "slope bound", lemma3);
  criterion(6, "differential equation", ode);
  criterion(7, "series and closed form", taylor);
  criterion(8, "Poisson representation", poisson);
  criterion(9, "theorem scan", scan);
  criterion(10, "main inequality", main_inequality);
  criterion(11, "gallery", gallery);
  criterion(12, "rearrangement", rearrangement);
  criterion(13, "infrastructure", infrastructure);
  std::printf("%s  %d of 13 criteria failed\n", failures == 0 ? "PASS" : "FAIL", failures);
  return failures == 0 ? 0 : 1;
}
