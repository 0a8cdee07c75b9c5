#include "msp/cli/report.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "msp/bernd/coefficients.hpp"
#include "msp/cli/run.hpp"
#include "msp/engine/certify.hpp"
#include "msp/harmonic/poisson.hpp"
#include "msp/harmonic/rearrangement.hpp"
#include "msp/paperfns/closed_forms.hpp"
#include "msp/paperfns/gallery.hpp"
#include "msp/paperfns/lemmas.hpp"
#include "msp/paperfns/registry.hpp"

namespace msp::cli {

namespace {

using rigor::Dyadic;
using rigor::Interval;
using rigor::Precision;
using rigor::Rational;

const Precision kPrec(64);

class Writer {
 public:
  void section(const std::string& name, const std::function<void()>& body) {
    out_ << "== " << name << " ==\n";
    try {
      body();
    } catch (const std::exception& e) {
      check(false, std::string("error: ") + e.what());
    }
  }

  void check(bool pass, const std::string& text) {
    ++checks_;
    if (!pass) ++failures_;
    out_ << (pass ? "PASS" : "FAIL") << "  " << text << "\n";
  }

  Report finish() {
    out_ << "== summary ==\n";
    if (failures_ == 0) {
      out_ << "PASS  all " << checks_ << " checks\n";
    } else {
      out_ << "FAIL  " << failures_ << " of " << checks_ << " checks\n";
    }
    return {out_.str(), failures_};
  }

 private:
  std::ostringstream out_;
  int checks_ = 0;
  int failures_ = 0;
};

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

bool inside(const Interval& x, double lo, double hi) {
  return Dyadic::from_double(lo) <= x.lo() && x.hi() <= Dyadic::from_double(hi);
}

void lemmas(Writer& w) {
  const auto l1 = paperfns::lemma1_check();
  w.check(l1.ok, "lemma1_check: p and its denominator positive on [0, 1/3]");
  const Dyadic tol = Dyadic(1).ldexp(-30);
  const auto roots = paperfns::p_roots(Dyadic(0), Dyadic(10), tol);
  w.check(roots.size() == 2 && inside(roots[0], 0.392976 - 1e-6, 0.392976 + 1e-6) &&
              inside(roots[1], 7.78294 - 1e-5, 7.78294 + 1e-5),
          "positive roots of p: " + (roots.size() == 2 ? fmt(roots[0].mid_double()) + ", " + fmt(roots[1].mid_double())
                                                       : std::to_string(roots.size()) + " found"));
  const auto den = paperfns::poly_roots(paperfns::denominator_poly(), Dyadic(-10), Dyadic(10), tol);
  w.check(den.size() == 2 && inside(den[1], 7.78849 - 1e-5, 7.78849 + 1e-5) &&
              inside(den[0], -7.78849 - 1e-5, -7.78849 + 1e-5),
          "denominator roots: +-" + (den.size() == 2 ? fmt(den[1].mid_double()) : std::string("?")));
  const Interval c = paperfns::lemma2_check(kPrec);
  w.check(c.lo().sign() > 0 && inside(c, 0.570891 - 1e-6, 0.570891 + 1e-6) && paperfns::lemma2_hypotheses(kPrec),
          "lemma2_check: h >= " + fmt(c.lo().to_double()) + " on [3, pi)");
  const auto l3 = paperfns::lemma3_chain_check(kPrec);
  w.check(l3.ok, "lemma3_chain_check: |h'| <= " + fmt(l3.bound.hi().to_double()) + " on [1/3, 3]");
  const auto sup = engine::bound_sup_abs(paperfns::paper_registry().at("hprime"), paperfns::h_run_start(), Dyadic(3),
                                         paperfns::h_slope(), kPrec, 30);
  w.check(sup.status == engine::SupStatus::proved, "|h'| < 20 by bisection, boxes = " + std::to_string(sup.boxes));
}

void dk(Writer& w, const bernd::BernoulliSource& src) {
  bool same = true;
  for (int k = 1; k <= 40; ++k) same = same && bernd::d_closed(k, src) == bernd::d_recur(k, src);
  w.check(same, "closed form equals recurrence for k = 1..40");
  const bernd::CoeffTable table = bernd::build_coeff_table(32, src);
  int positive = 0;
  for (const auto& entry : table.entries) positive += bernd::linlog2_sign(entry.second) == bernd::Sign::positive;
  w.check(positive == 32, std::to_string(positive) + " of 32 coefficients positive");
  const bernd::DkExtremes ex = bernd::dk_extremes(32, src);
  w.check(ex.max_r == Rational(177, 256) && ex.min_s && *ex.min_s == Rational(89, 128),
          "max r = " + rigor::format_rational(ex.max_r) +
              "  min s = " + (ex.min_s ? rigor::format_rational(*ex.min_s) : std::string("none")));
  bool tail = true;
  for (int k = 33; k <= 64; ++k) tail = tail && bernd::dk_asymptotic_check(k);
  w.check(tail, "asymptotic positivity for k = 33..64");
}

void certificate(Writer& w) {
  const auto& reg = paperfns::paper_registry();
  const auto cert = engine::msp_certify(reg.at("h"), paperfns::h_run_start(), Dyadic(3),
                                        engine::SlopeBound::constant(paperfns::h_slope()), kPrec);
  const double n = static_cast<double>(cert.points.size());
  w.check(std::abs(n - 4163) <= 416.3, "h > 0 on [" + paperfns::h_run_start().str() + ", 3]: " +
                                           std::to_string(cert.points.size()) + " points");
  const auto verdict = engine::msp_verify(cert, reg);
  w.check(verdict.valid, "verifier: " + verdict.reason);
  const std::string text = engine::to_text(cert);
  w.check(engine::to_text(engine::from_text(text)) == text, "round trip is byte-identical");
}

void flett(Writer& w) {
  const Interval zero = paperfns::flett_first_zero(Dyadic(1).ldexp(-24));
  w.check(inside(zero, 48.418454 - 1e-5, 48.418454 + 1e-5), "first zero in " + zero.str() + " ~ " +
                                                                 fmt(zero.mid_double()));
  const auto& reg = paperfns::paper_registry();
  const auto cert = engine::msp_certify(reg.at("flett"), Dyadic(1).ldexp(-10), Dyadic(48),
                                        engine::SlopeBound::constant(paperfns::flett_slope()), kPrec);
  w.check(engine::msp_verify(cert, reg).valid,
          "F > 0 on [2^-10, 48]: " + std::to_string(cert.points.size()) + " points, VALID");
}

void gallery(Writer& w) {
  const auto grid = paperfns::uniform_grid(-50, 50, 0.25);
  bool convex = true;
  for (int n = 2; n <= 10; ++n) convex = convex && paperfns::q_logconvex_check(n, grid);
  w.check(convex, "Q log-convex for n = 2..10 on [-50, 50] step 0.25");
  const auto zeros = paperfns::r23_zeros(0, 200, 1e-12);
  double worst = 0;
  for (double z : zeros) worst = std::max(worst, std::abs(paperfns::r23_eval(z)));
  w.check(!zeros.empty() && worst <= 1e-10,
          std::to_string(zeros.size()) + " zeros of R_23 on [0, 200], max residual " + fmt(worst));
}

void series(Writer& w) {
  const double step = 1e-4;
  const Precision fine(96);
  auto u = [&](double x) { return paperfns::u_closed(Interval(Dyadic::from_double(x)), fine).mid_double(); };
  double ode = 0;
  for (int i = 0; i < 100; ++i) {
    const double phi = 0.1 + 2.9 * i / 99;
    const double second = (-u(phi + 2 * step) + 16 * u(phi + step) - 30 * u(phi) + 16 * u(phi - step) -
                           u(phi - 2 * step)) / (12 * step * step);
    ode = std::max(ode, std::abs(second + 4 * u(phi) - (1 - 1 / (2 * (1 + std::cos(phi))))));
  }
  w.check(ode <= 1e-6, "differential equation residual " + fmt(ode));

  double taylor = 0;
  for (int i = 0; i < 200; ++i) {
    const double phi = -2 + 4.0 * i / 199;
    const double closed = paperfns::h_closed(Interval(Dyadic::from_double(phi)), kPrec).mid_double();
    taylor = std::max(taylor, std::abs(bernd::h_taylor(phi, 64) - closed));
  }
  w.check(taylor <= 1e-10, "Taylor series against closed form on [-2, 2]: " + fmt(taylor));

  int failures = 0, pairs = 0;
  for (double r : radii()) {
    for (double phi : angles()) {
      ++pairs;
      if (!paperfns::main_inequality_check(r, phi, 400)) ++failures;
    }
  }
  w.check(failures == 0, "series inequality with tails: " + std::to_string(pairs) + " pairs, " +
                             std::to_string(failures) + " failures");
}

void scan(Writer& w) {
  const auto report = harmonic::theorem_scan(radii(), angles());
  w.check(report.violations.empty(), std::to_string(report.pairs) + " pairs, " +
                                         std::to_string(report.violations.size()) + " violations, min margin " +
                                         fmt(report.minimum.margin) + " at r = " + fmt(report.minimum.r) +
                                         ", phi = " + fmt(report.minimum.phi));
  const double D = harmonic::strict_gap_D(0.5, 2.0, 0.3, 0.1);
  w.check(D > 0, "strict gap D(r = 0.5, phi = 2, delta = 0.3, eps = 0.1) = " + fmt(D));
}

void poisson(Writer& w) {
  double worst = 0;
  for (double r : {0.5, 8.0 / 9, 0.883}) {
    for (int j = 0; j < 20; ++j) {
      const double phi = -3.0 + 6.0 * j / 19;
      worst = std::max(worst, std::abs(harmonic::U_poisson(r, phi, 4096) - harmonic::U_direct(r, phi)));
    }
  }
  w.check(worst <= 1e-6, "Poisson integral against closed form, 60 points: max difference " + fmt(worst));
  const double mean = harmonic::U_poisson(0, 0, 4096);
  w.check(std::abs(mean - (std::numbers::ln2 - 0.5)) <= 1e-10, "mean of h over the circle " + fmt(mean));
}

void rearrangement(Writer& w, std::uint64_t seed) {
  const harmonic::CircleGrid g6{{0, 0, 1, 2, 1, 0}, {2, 2, 1, 0, 1, 2}};
  const auto all = harmonic::rearrangement_exhaustive(g6);
  w.check(all.trials == 720 && all.violations == 0,
          std::to_string(all.trials) + " permutations at N = 6, " + std::to_string(all.violations) + " violations");
  const auto random = harmonic::rearrangement_random(64, 10'000, seed);
  w.check(random.violations == 0, std::to_string(random.trials) + " random trials at N = 64 (seed " +
                                      std::to_string(seed) + "), " + std::to_string(random.violations) +
                                      " violations");
}

}  // namespace

Report report_bundle(const ReportOptions& options) {
  Writer w;
  w.section("lemmas", [&] { lemmas(w); });
  w.section("dk", [&] { dk(w, options.bernoulli); });
  w.section("certificate", [&] { certificate(w); });
  w.section("flett", [&] { flett(w); });
  w.section("gallery", [&] { gallery(w); });
  w.section("series", [&] { series(w); });
  w.section("scan", [&] { scan(w); });
  w.section("poisson", [&] { poisson(w); });
  w.section("rearrangement", [&] { rearrangement(w, options.seed); });
  return w.finish();
}

}  // namespace msp::cli
