#include "msp/cli/run.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "msp/bernd/coefficients.hpp"
#include "msp/cli/report.hpp"
#include "msp/engine/certify.hpp"
#include "msp/harmonic/poisson.hpp"
#include "msp/paperfns/lemmas.hpp"
#include "msp/paperfns/registry.hpp"

namespace msp::cli {

using rigor::Dyadic;
using rigor::Precision;
using rigor::Rational;
using rigor::Rounding;

namespace {

// Fractional bits used when suggesting a dyadic replacement for a rational.
constexpr std::int64_t kSuggestBits = 16;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string dyadic_text(const Dyadic& d) { return rigor::format_rational(d.to_rational()) + " (" + d.str() + ")"; }

Dyadic exact_endpoint(const std::string& flag, const std::string& text, Rounding outward) {
  const Rational x = parse_number(text);
  if (Dyadic::is_dyadic(x)) return Dyadic::from_rational(x);
  const Dyadic suggestion = rigor::round_to_grid(x, -kSuggestBits, outward);
  throw UsageError(flag + " " + text + " is not dyadic; certify needs exact dyadic endpoints. Outward dyadic: " +
                   dyadic_text(suggestion));
}

// Slope bounds may be rounded up freely: a larger bound stays valid.
Dyadic slope_value(const std::string& text, std::ostream& out) {
  const Rational x = parse_number(text);
  if (x <= 0) throw UsageError("slope bound must be positive");
  if (Dyadic::is_dyadic(x)) return Dyadic::from_rational(x);
  const Dyadic up = rigor::round_to_grid(x, -kSuggestBits, Rounding::up);
  out << "slope " << text << " rounded up to " << dyadic_text(up) << "\n";
  return up;
}

engine::SlopePiece slope_piece(const std::string& text, std::ostream& out) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw UsageError("slope piece must be lo:hi:bound, got '" + text + "'");
  }
  return {exact_endpoint("--slope-piece lo", text.substr(0, first), Rounding::down),
          exact_endpoint("--slope-piece hi", text.substr(first + 1, second - first - 1), Rounding::up),
          slope_value(text.substr(second + 1), out)};
}

double to_double(const Rational& x) { return x.get_d(); }

struct CertifyArgs {
  std::string fn, a, b, slope, fraction = "1", out_path;
  std::vector<std::string> pieces;
  int prec = 64;
  unsigned shards = 1;
  std::size_t max_points = 1'000'000;
};

int cmd_certify(const CertifyArgs& args, std::ostream& out, std::ostream& err) {
  const auto& registry = paperfns::paper_registry();
  if (!registry.contains(args.fn)) throw UsageError("unknown function '" + args.fn + "'");
  const Dyadic a = exact_endpoint("--a", args.a, Rounding::down);
  const Dyadic b = exact_endpoint("--b", args.b, Rounding::up);
  if (!(a < b)) throw UsageError("--a must be below --b");
  if (args.slope.empty() == args.pieces.empty()) throw UsageError("give either --slope or --slope-piece");
  if (args.prec < Precision::kMinBits) throw UsageError("--prec must be at least 16");
  const Rational fraction = parse_number(args.fraction);
  if (fraction <= 0 || fraction > 1) throw UsageError("--fraction must lie in (0, 1]");
  if (args.shards == 0) throw UsageError("--shards must be positive");

  engine::SlopeBound slope = engine::SlopeBound::constant(Dyadic(1));
  if (!args.slope.empty()) {
    slope = engine::SlopeBound::constant(slope_value(args.slope, out));
  } else {
    std::vector<engine::SlopePiece> pieces;
    for (const auto& text : args.pieces) pieces.push_back(slope_piece(text, out));
    slope = engine::SlopeBound::table(std::move(pieces));
    try {
      slope.validate(a, b);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("slope table: ") + e.what());
    }
  }

  engine::Certificate cert;
  try {
    cert = engine::msp_certify_sharded(registry.at(args.fn), a, b, slope, Precision(args.prec), fraction, args.shards,
                                              args.max_points);
  } catch (const engine::CertifyError& e) {
    err << "FAIL: " << e.what() << "\n";
    return kFail;
  }
  out << "certified " << cert.fn_name << " > 0 on [" << a.str() << ", " << b.str() << "]: " << cert.points.size()
      << " points at " << cert.precision_bits << " bits\n";
  if (!args.out_path.empty()) {
    std::ofstream file(args.out_path, std::ios::binary);
    if (!file) {
      err << "cannot write " << args.out_path << "\n";
      return kFail;
    }
    engine::write_certificate(file, cert);
    out << "wrote " << args.out_path << "\n";
  }
  return kOk;
}

int cmd_verify(const std::string& path, std::ostream& out) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    out << "INVALID: cannot read " << path << "\n";
    return kFail;
  }
  engine::Certificate cert;
  try {
    cert = engine::read_certificate(file);
  } catch (const std::exception& e) {
    out << "INVALID: " << e.what() << "\n";
    return kFail;
  }
  const auto& registry = paperfns::paper_registry();
  if (!registry.contains(cert.fn_name)) {
    out << "INVALID: unknown function '" << cert.fn_name << "'\n";
    return kFail;
  }
  const engine::Verdict v = engine::msp_verify(cert, registry);
  if (!v) {
    out << "INVALID: " << v.reason << "\n";
    return kFail;
  }
  out << "VALID\n"
      << cert.fn_name << " > 0 on [" << cert.a.str() << ", " << cert.b.str() << "], " << cert.points.size()
      << " points\n";
  return kOk;
}

int cmd_dk(int kmax, std::ostream& out) {
  if (kmax < 1 || kmax > 1000) throw UsageError("--max must lie in [1, 1000]");
  const bernd::CoeffTable table = bernd::build_coeff_table(kmax);
  bool all_positive = true;
  for (const auto& [k, d] : table.entries) {
    const bernd::Sign s = bernd::linlog2_sign(d);
    all_positive = all_positive && s == bernd::Sign::positive;
    out << "d_" << k << " = " << d.str() << "  ~ " << fmt(d.to_double()) << "  " << bernd::to_string(s) << "\n";
  }
  const bernd::DkExtremes ex = bernd::dk_extremes(kmax);
  out << "max r = " << rigor::format_rational(ex.max_r)
      << "  min s = " << (ex.min_s ? rigor::format_rational(*ex.min_s) : std::string("none")) << "  "
      << (all_positive ? "ALL POSITIVE" : "NOT ALL POSITIVE") << "\n";
  return all_positive ? kOk : kFail;
}

int cmd_lemmas(int prec, std::ostream& out) {
  if (prec < Precision::kMinBits) throw UsageError("--prec must be at least 16");
  const Precision p(prec);
  bool ok = true;
  auto line = [&](bool pass, const std::string& text) {
    ok = ok && pass;
    out << (pass ? "PASS" : "FAIL") << "  " << text << "\n";
  };

  const paperfns::Lemma1Result l1 = paperfns::lemma1_check();
  line(l1.ok, std::string("lemma1_check: p(0) ") + bernd::to_string(l1.p_at_zero) + ", p(1/3) " + bernd::to_string(l1.p_at_third) +
                  ", p > 0 on [0, 1/3]: " + (l1.p_positive ? "yes" : "no") +
                  ", denominator > 0: " + (l1.denominator_positive ? "yes" : "no"));

  const rigor::Interval c = paperfns::lemma2_check(p);
  line(c.lo().sign() > 0 && paperfns::lemma2_hypotheses(p),
       "lemma2_check: h >= " + c.str() + " ~ " + fmt(c.mid_double()) + " on [3, pi)");

  const paperfns::Lemma3Chain l3 = paperfns::lemma3_chain_check(p);
  line(l3.ok, "lemma3_chain_check: |h'| <= " + fmt(l3.bound.hi().to_double()) + " < 20 on [1/3, 3]");

  const auto sup = engine::bound_sup_abs(paperfns::paper_registry().at("hprime"), paperfns::h_run_start(), Dyadic(3),
                                         paperfns::h_slope(), p, 30);
  line(sup.status == engine::SupStatus::proved,
       "sup bound: |h'| < 20 on [" + paperfns::h_run_start().str() + ", 3], boxes = " + std::to_string(sup.boxes));
  return ok ? kOk : kFail;
}

int cmd_poisson(const std::string& r_text, const std::string& phi_text, int quad, std::ostream& out) {
  const double r = to_double(parse_number(r_text));
  const double phi = to_double(parse_number(phi_text));
  if (!(r > 0 && r < 1)) throw UsageError("--r must lie in (0, 1)");
  if (quad < 64) throw UsageError("--quad must be at least 64");
  const double direct = harmonic::U_direct(r, phi);
  const double poisson = harmonic::U_poisson(r, phi, quad);
  out << "U_direct   = " << fmt(direct) << "\n"
      << "U_poisson  = " << fmt(poisson) << "\n"
      << "difference = " << fmt(poisson - direct) << "\n";
  return kOk;
}

int cmd_scan(const std::string& r_grid, const std::string& phi_grid, std::ostream& out) {
  std::vector<double> radii, angles;
  for (const Rational& r : parse_grid(r_grid)) {
    if (r <= 0 || r >= 1) {
      throw UsageError("scan radii must lie in (0, 1); r = " + rigor::format_rational(r) +
                       " is outside (r = 1 is covered by the certificate run)");
    }
    radii.push_back(to_double(r));
  }
  for (const Rational& phi : parse_grid(phi_grid)) {
    const double x = to_double(phi);
    if (!(x > 0 && x < M_PI)) throw UsageError("scan angles must lie in (0, pi)");
    angles.push_back(x);
  }
  const harmonic::ScanReport report = harmonic::theorem_scan(radii, angles);
  out << "pairs = " << report.pairs << "\n" << "violations = " << report.violations.size() << "\n";
  for (const auto& v : report.violations) {
    out << "  violation at r = " << fmt(v.r) << ", phi = " << fmt(v.phi) << ": margin " << fmt(v.margin) << "\n";
  }
  out << "min margin = " << fmt(report.minimum.margin) << " at r = " << fmt(report.minimum.r)
      << ", phi = " << fmt(report.minimum.phi) << "\n";
  return report.violations.empty() ? kOk : kFail;
}

}  // namespace

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Rational parse_number(const std::string& text) {
  if (text.find('*') != std::string::npos) return Dyadic::parse(text).to_rational();
  return rigor::parse_rational(text);
}

std::vector<Rational> parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos) throw UsageError("grid must be a:b:step, got '" + text + "'");
  const Rational lo = parse_number(text.substr(0, first));
  const Rational hi = parse_number(text.substr(first + 1, second - first - 1));
  const Rational step = parse_number(text.substr(second + 1));
  if (step <= 0) throw UsageError("grid step must be positive");
  if (hi < lo) throw UsageError("grid end is below its start");
  std::vector<Rational> grid;
  for (Rational x = lo; x <= hi; x += step) {
    grid.push_back(x);
    if (grid.size() > 1'000'000) throw UsageError("grid has more than 10^6 points");
  }
  return grid;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positivity certificates by the maximal slope principle", "msptool"};
  app.require_subcommand(1);

  CertifyArgs cert;
  auto* certify = app.add_subcommand("certify", "Certify f > 0 on [a, b]");
  certify->add_option("--fn", cert.fn, "Registry function")->required();
  certify->add_option("--a", cert.a, "Left endpoint (dyadic)")->required();
  certify->add_option("--b", cert.b, "Right endpoint (dyadic)")->required();
  certify->add_option("--slope", cert.slope, "Constant bound on |f'|");
  certify->add_option("--slope-piece", cert.pieces, "Slope table piece lo:hi:bound (repeatable)");
  certify->add_option("--prec", cert.prec, "Precision in bits")->capture_default_str();
  certify->add_option("--fraction", cert.fraction, "Step fraction in (0, 1]")->capture_default_str();
  certify->add_option("--shards", cert.shards, "Concurrent shards")->capture_default_str();
  certify->add_option("--max-points", cert.max_points, "Point budget per shard, 0 for none")->capture_default_str();
  certify->add_option("--out", cert.out_path, "Certificate file");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Replay a certificate");
  verify->add_option("file", verify_path, "Certificate file")->required();

  int dk_max = 32;
  auto* dk = app.add_subcommand("dk", "Taylor coefficients d_k and their signs");
  dk->add_option("--max", dk_max, "Largest k")->capture_default_str();

  int lemma_prec = 64;
  auto* lemmas = app.add_subcommand("lemmas", "Check the three lemmas and the slope bound");
  lemmas->add_option("--prec", lemma_prec, "Precision in bits")->capture_default_str();

  std::string r_text, phi_text;
  int quad = 4096;
  auto* poisson = app.add_subcommand("poisson", "Compare the Poisson integral with the closed form");
  poisson->add_option("--r", r_text, "Radius in (0, 1)")->required();
  poisson->add_option("--phi", phi_text, "Angle")->required();
  poisson->add_option("--quad", quad, "Quadrature nodes")->capture_default_str();

  std::string r_grid, phi_grid;
  auto* scan = app.add_subcommand("scan", "Scan U(r, phi) > U(r, 0)");
  scan->add_option("--r-grid", r_grid, "a:b:step")->required();
  scan->add_option("--phi-grid", phi_grid, "a:b:step")->required();

  std::uint64_t seed = 0;
  auto* report = app.add_subcommand("report", "Full reproduction report");
  report->add_option("--seed", seed, "Seed for the random trials")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help("", CLI::AppFormatMode::All);
    return kUsage;
  }

  try {
    if (*certify) return cmd_certify(cert, out, err);
    if (*verify) return cmd_verify(verify_path, out);
    if (*dk) return cmd_dk(dk_max, out);
    if (*lemmas) return cmd_lemmas(lemma_prec, out);
    if (*poisson) return cmd_poisson(r_text, phi_text, quad, out);
    if (*scan) return cmd_scan(r_grid, phi_grid, out);
    if (*report) {
      const Report r = report_bundle({seed});
      out << r.text;
      return r.passed() ? kOk : kFail;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const rigor::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace msp::cli
