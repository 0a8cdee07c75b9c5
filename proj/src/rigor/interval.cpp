#include "msp/rigor/interval.hpp"

#include <array>
#include <algorithm>

namespace msp::rigor {

Interval::Interval(Dyadic point) : lo_(point), hi_(std::move(point)) {}

Interval::Interval(Dyadic lo, Dyadic hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::invalid_argument("interval with lo > hi: " + str());
}

Interval Interval::enclose(const Rational& x, Precision p) {
  return Interval(round_dir(x, p, Rounding::down), round_dir(x, p, Rounding::up));
}

Dyadic Interval::mag() const { return max(lo_.abs(), hi_.abs()); }

bool Interval::contains(const Rational& x) const {
  return compare(lo_, x) <= 0 && compare(hi_, x) >= 0;
}

Interval hull(const Interval& x, const Interval& y) {
  return Interval(min(x.lo(), y.lo()), max(x.hi(), y.hi()));
}

Interval intersect(const Interval& x, const Interval& y) {
  if (!x.overlaps(y)) throw std::domain_error("empty intersection of " + x.str() + " and " + y.str());
  return Interval(max(x.lo(), y.lo()), min(x.hi(), y.hi()));
}

Interval neg(const Interval& x) { return Interval(-x.hi(), -x.lo()); }

Interval ldexp(const Interval& x, std::int64_t k) { return Interval(x.lo().ldexp(k), x.hi().ldexp(k)); }

Interval abs(const Interval& x) {
  if (x.lo().sign() >= 0) return x;
  if (x.hi().sign() <= 0) return neg(x);
  return Interval(Dyadic(), x.mag());
}

Interval round_out(const Interval& x, Precision p) {
  return Interval(round_dir(x.lo(), p, Rounding::down), round_dir(x.hi(), p, Rounding::up));
}

Interval add(const Interval& x, const Interval& y, Precision p) {
  return Interval(round_dir(x.lo() + y.lo(), p, Rounding::down), round_dir(x.hi() + y.hi(), p, Rounding::up));
}

Interval sub(const Interval& x, const Interval& y, Precision p) {
  return Interval(round_dir(x.lo() - y.hi(), p, Rounding::down), round_dir(x.hi() - y.lo(), p, Rounding::up));
}

Interval mul(const Interval& x, const Interval& y, Precision p) {
  if (x.is_point() && y.is_point()) {
    const Dyadic v = x.lo() * y.lo();
    return Interval(round_dir(v, p, Rounding::down), round_dir(v, p, Rounding::up));
  }
  if (x.lo().sign() >= 0 && y.lo().sign() >= 0) {
    return Interval(round_dir(x.lo() * y.lo(), p, Rounding::down), round_dir(x.hi() * y.hi(), p, Rounding::up));
  }
  if (x.hi().sign() <= 0 && y.hi().sign() <= 0) {
    return Interval(round_dir(x.hi() * y.hi(), p, Rounding::down), round_dir(x.lo() * y.lo(), p, Rounding::up));
  }
  if (x.lo().sign() >= 0 && y.hi().sign() <= 0) {
    return Interval(round_dir(x.hi() * y.lo(), p, Rounding::down), round_dir(x.lo() * y.hi(), p, Rounding::up));
  }
  if (x.hi().sign() <= 0 && y.lo().sign() >= 0) {
    return Interval(round_dir(x.lo() * y.hi(), p, Rounding::down), round_dir(x.hi() * y.lo(), p, Rounding::up));
  }
  const std::array<Dyadic, 4> products{x.lo() * y.lo(), x.lo() * y.hi(), x.hi() * y.lo(), x.hi() * y.hi()};
  const auto [lo, hi] = std::minmax_element(products.begin(), products.end());
  return Interval(round_dir(*lo, p, Rounding::down), round_dir(*hi, p, Rounding::up));
}

namespace {

// a / b rounded in direction dir on a grid at least as fine as round_dir's.
Dyadic quotient(const Dyadic& a, const Dyadic& b, Precision p, Rounding dir) {
  if (a.is_zero()) return a;
  // floor(log2|a/b|) is lg or lg - 1; using lg - 1 keeps at least p bits.
  const std::int64_t lg = a.ilog2() - b.ilog2();
  const std::int64_t quantum = std::max<std::int64_t>(0, lg - 1) - p.bits();
  const std::int64_t shift = a.exponent() - b.exponent() - quantum;
  mpz_class num = a.mantissa();
  mpz_class den = b.mantissa();
  if (shift >= 0) {
    num <<= static_cast<mp_bitcnt_t>(shift);
  } else {
    den <<= static_cast<mp_bitcnt_t>(-shift);
  }
  mpz_class q;
  if (dir == Rounding::down) {
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  } else {
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  return Dyadic(std::move(q), quantum);
}

}  // namespace

Interval div(const Interval& x, const Interval& y, Precision p) {
  if (y.contains_zero()) throw DivisionByIntervalContainingZero();
  if (y.is_point()) {
    const Dyadic& d = y.lo();
    const Dyadic& lo = d.sign() > 0 ? x.lo() : x.hi();
    const Dyadic& hi = d.sign() > 0 ? x.hi() : x.lo();
    return Interval(quotient(lo, d, p, Rounding::down), quotient(hi, d, p, Rounding::up));
  }
  const std::array<std::pair<const Dyadic*, const Dyadic*>, 4> cases{
      {{&x.lo(), &y.lo()}, {&x.lo(), &y.hi()}, {&x.hi(), &y.lo()}, {&x.hi(), &y.hi()}}};
  Dyadic lo = quotient(*cases[0].first, *cases[0].second, p, Rounding::down);
  Dyadic hi = quotient(*cases[0].first, *cases[0].second, p, Rounding::up);
  for (std::size_t i = 1; i < cases.size(); ++i) {
    lo = min(lo, quotient(*cases[i].first, *cases[i].second, p, Rounding::down));
    hi = max(hi, quotient(*cases[i].first, *cases[i].second, p, Rounding::up));
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval inv(const Interval& x, Precision p) { return div(Interval(1), x, p); }

Interval sqr(const Interval& x, Precision p) {
  const Interval a = abs(x);
  return Interval(round_dir(a.lo() * a.lo(), p, Rounding::down), round_dir(a.hi() * a.hi(), p, Rounding::up));
}

Interval pow(const Interval& x, unsigned n, Precision p) {
  if (n == 0) return Interval(1);
  // Odd powers are monotone; even powers depend on |x| only.
  if (n % 2 == 1) {
    Interval lo(x.lo());
    Interval hi(x.hi());
    Interval rlo = lo;
    Interval rhi = hi;
    for (unsigned i = 1; i < n; ++i) {
      rlo = mul(rlo, lo, p);
      rhi = mul(rhi, hi, p);
    }
    return Interval(rlo.lo(), rhi.hi());
  }
  const Interval a = abs(x);
  Interval rlo(a.lo());
  Interval rhi(a.hi());
  for (unsigned i = 1; i < n; ++i) {
    rlo = mul(rlo, Interval(a.lo()), p);
    rhi = mul(rhi, Interval(a.hi()), p);
  }
  return Interval(rlo.lo(), rhi.hi());
}

}  // namespace msp::rigor
