#include "msp/engine/certify.hpp"

#include <future>
#include <vector>

namespace msp::engine {

namespace {

using rigor::Rounding;

// Steps live on the grid 2^-(bits + 8); a step that rounds to zero underflows.
std::int64_t step_grid(Precision p) { return -(static_cast<std::int64_t>(p.bits()) + 8); }

// Slope bound for the cone below t with height `lower`: grow M until it covers
// every table piece the cone reaches. M only increases, so this terminates.
Dyadic cone_slope(const SlopeBound& slope, const Dyadic& a, const Dyadic& t, const Dyadic& lower, Precision p) {
  Dyadic m = slope.max_over(t, t);
  if (slope.is_constant()) return m;
  for (;;) {
    const Rational reach = t.to_rational() - lower.to_rational() / m.to_rational();
    const Dyadic from = rigor::compare(a, reach) >= 0 ? a : rigor::round_to_grid(reach, step_grid(p), Rounding::down);
    const Dyadic next = slope.max_over(max(a, from), t);
    if (next == m) return m;
    m = next;
  }
}

void check_interval(const Dyadic& a, const Dyadic& b, const SlopeBound& slope) {
  if (!(a < b)) throw std::invalid_argument("certify needs a < b");
  slope.validate(a, b);
}

}  // namespace

Certificate msp_certify(const RigorFn& f, const Dyadic& a, const Dyadic& b, const SlopeBound& slope, Precision p,
                        const Rational& step_fraction, std::size_t max_points) {
  check_interval(a, b, slope);
  if (step_fraction <= 0 || step_fraction > 1) throw std::invalid_argument("step fraction must lie in (0, 1]");

  Certificate cert{f.name, a, b, slope, p.bits(), {}};
  Dyadic t = b;
  for (;;) {
    const Interval enclosure = f.eval(Interval(t), p);
    const Dyadic& lower = enclosure.lo();
    if (lower.sign() <= 0) {
      throw CannotCertify("no positive lower bound for " + f.name + " at " + t.str() + ": " + enclosure.str(), t,
                          enclosure);
    }
    if (max_points != 0 && cert.points.size() == max_points) {
      throw PointBudgetExceeded(f.name + " needs more than " + std::to_string(max_points) + " points; stopped at " +
                                    t.str(),
                                t);
    }
    cert.points.push_back({t, lower});

    const Dyadic m = cone_slope(slope, a, t, lower, p);
    // Terminal: the full cone t - lower/M reaches below a.
    if ((t - a) * m < lower) return cert;

    const Rational step_exact = step_fraction * lower.to_rational() / m.to_rational();
    const Dyadic step = rigor::round_to_grid(step_exact, step_grid(p), Rounding::down);
    if (step.is_zero()) {
      throw StepUnderflow("step below 2^" + std::to_string(step_grid(p)) + " at " + t.str() + " for " + f.name, t);
    }
    t = max(t - step, a);
  }
}

Certificate msp_certify_sharded(const RigorFn& f, const Dyadic& a, const Dyadic& b, const SlopeBound& slope,
                                Precision p, const Rational& step_fraction, unsigned shards, std::size_t max_points) {
  if (shards == 0) throw std::invalid_argument("shard count must be positive");
  if (shards == 1) return msp_certify(f, a, b, slope, p, step_fraction, max_points);
  check_interval(a, b, slope);

  std::vector<Dyadic> cuts{a};
  const Rational width = b.to_rational() - a.to_rational();
  for (unsigned i = 1; i < shards; ++i) {
    const Dyadic cut = rigor::round_to_grid(a.to_rational() + width * Rational(i, shards), step_grid(p), Rounding::down);
    if (cuts.back() < cut && cut < b) cuts.push_back(cut);
  }
  cuts.push_back(b);

  std::vector<std::future<Certificate>> runs;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    runs.push_back(std::async(std::launch::async, [&, i] {
      try {
        return msp_certify(f, cuts[i], cuts[i + 1], slope, p, step_fraction, max_points);
      } catch (const CannotCertify& e) {
        throw CannotCertify("shard [" + cuts[i].str() + ", " + cuts[i + 1].str() + "]: " + e.what(), e.point(),
                            e.enclosure());
      } catch (const StepUnderflow& e) {
        throw StepUnderflow("shard [" + cuts[i].str() + ", " + cuts[i + 1].str() + "]: " + e.what(), e.point());
      } catch (const PointBudgetExceeded& e) {
        throw PointBudgetExceeded("shard [" + cuts[i].str() + ", " + cuts[i + 1].str() + "]: " + e.what(), e.point());
      }
    }));
  }
  std::vector<Certificate> parts;
  for (auto& run : runs) parts.push_back(run.get());

  Certificate merged{f.name, a, b, slope, p.bits(), {}};
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    for (const CertPoint& point : it->points) {
      // A shard that ends exactly on its cut duplicates the next shard's first point.
      if (!merged.points.empty() && merged.points.back().t == point.t) continue;
      merged.points.push_back(point);
    }
  }
  return merged;
}

namespace {

Verdict invalid(std::string reason, std::optional<std::size_t> index = std::nullopt) {
  return Verdict{false, std::move(reason), index};
}

// Structural checks shared by the verifier and the pure coverage check.
Verdict check_structure(const Certificate& cert) {
  if (!(cert.a < cert.b)) return invalid("a must be below b");
  if (cert.precision_bits < Precision::kMinBits) return invalid("precision below 16 bits");
  try {
    cert.slope.validate(cert.a, cert.b);
  } catch (const std::invalid_argument& e) {
    return invalid(std::string("slope bound: ") + e.what());
  }
  if (cert.points.empty()) return invalid("no points");
  if (cert.points.front().t != cert.b) return invalid("first point is not b", 0);
  for (std::size_t k = 0; k + 1 < cert.points.size(); ++k) {
    if (!(cert.points[k + 1].t < cert.points[k].t)) return invalid("points not strictly decreasing at " + std::to_string(k + 1), k + 1);
  }
  if (cert.points.back().t < cert.a) return invalid("last point below a", cert.points.size() - 1);
  return Verdict{true, {}, {}};
}

// Cone condition for point k given its lower bound.
Verdict check_link(const Certificate& cert, std::size_t k, const Dyadic& lower) {
  if (lower.sign() <= 0) return invalid("non-positive lower bound at point " + std::to_string(k), k);
  const Dyadic& t = cert.points[k].t;
  if (k + 1 < cert.points.size()) {
    const Dyadic& next = cert.points[k + 1].t;
    const Dyadic m = cert.slope.max_over(next, t);
    if ((t - next) * m > lower) return invalid("gap at point " + std::to_string(k) + " exceeds lower/M", k);
  } else {
    const Dyadic m = cert.slope.max_over(cert.a, t);
    if (!((t - cert.a) * m < lower)) return invalid("last cone does not reach below a", k);
  }
  return Verdict{true, {}, {}};
}

}  // namespace

Verdict msp_verify(const Certificate& cert, const Registry& registry) {
  const RigorFn& f = registry.at(cert.fn_name);
  if (Verdict v = check_structure(cert); !v) return v;
  const Precision p(cert.precision_bits);
  for (std::size_t k = 0; k < cert.points.size(); ++k) {
    const Interval enclosure = f.eval(Interval(cert.points[k].t), p);
    if (Verdict v = check_link(cert, k, enclosure.lo()); !v) return v;
  }
  return Verdict{true, "VALID", {}};
}

bool coverage_holds(const Certificate& cert) {
  if (!check_structure(cert)) return false;
  for (std::size_t k = 0; k < cert.points.size(); ++k) {
    if (!check_link(cert, k, cert.points[k].lower)) return false;
  }
  return true;
}

}  // namespace msp::engine
