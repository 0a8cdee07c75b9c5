#include "msp/rigor/elementary.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

namespace msp::rigor {

namespace {

constexpr int kGuardBits = 32;

Interval div_int(const Interval& x, long n, Precision p) { return div(x, Interval(n), p); }

// Remainder bounds are tracked as dyadics with at most 64 significant bits,
// always rounded up, so that tiny bounds keep their relative accuracy.
constexpr mp_bitcnt_t kBoundBits = 64;

Dyadic trim_up(const Dyadic& x) {
  const std::size_t bits = mpz_sizeinbase(x.mantissa().get_mpz_t(), 2);
  if (bits <= kBoundBits) return x;
  const auto shift = static_cast<mp_bitcnt_t>(bits - kBoundBits);
  mpz_class m;
  mpz_cdiv_q_2exp(m.get_mpz_t(), x.mantissa().get_mpz_t(), shift);
  return Dyadic(std::move(m), x.exponent() + static_cast<std::int64_t>(shift));
}

// Upper bound of a / b for a >= 0, b > 0.
Dyadic div_up(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return a;
  const auto shift = static_cast<mp_bitcnt_t>(kBoundBits + mpz_sizeinbase(b.mantissa().get_mpz_t(), 2));
  mpz_class num = a.mantissa();
  num <<= shift;
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.mantissa().get_mpz_t());
  return trim_up(Dyadic(std::move(q), a.exponent() - b.exponent() - static_cast<std::int64_t>(shift)));
}

Dyadic mul_up(const Dyadic& a, const Dyadic& b) { return trim_up(a * b); }

// Series are truncated once the remainder bound drops below 2^-(w+2).
bool negligible(const Dyadic& bound, Precision w) {
  return bound.is_zero() || bound.ilog2() < -static_cast<std::int64_t>(w.bits() + 2);
}

Interval widen(const Interval& x, const Dyadic& r) { return Interval(x.lo() - r, x.hi() + r); }

Dyadic square_mag(const Interval& y) {
  const Dyadic m = y.mag();
  return mul_up(m, m);
}

// Alternating Taylor series of sin on |y| <= 1; the first omitted term bounds the remainder.
Interval sin_series(const Interval& y, Precision w) {
  const Interval y2 = sqr(y, w);
  const Dyadic ymag2 = square_mag(y);
  Interval term = y;
  Interval sum = y;
  Dyadic bound = trim_up(y.mag());
  for (long k = 1;; ++k) {
    const long denom = (2 * k) * (2 * k + 1);
    bound = div_up(mul_up(bound, ymag2), Dyadic(denom));
    if (negligible(bound, w)) return widen(sum, bound);
    term = neg(div_int(mul(term, y2, w), denom, w));
    sum = add(sum, term, w);
  }
}

Interval cos_series(const Interval& y, Precision w) {
  const Interval y2 = sqr(y, w);
  const Dyadic ymag2 = square_mag(y);
  Interval term(1);
  Interval sum(1);
  Dyadic bound(1);
  for (long k = 1;; ++k) {
    const long denom = (2 * k - 1) * (2 * k);
    bound = div_up(mul_up(bound, ymag2), Dyadic(denom));
    if (negligible(bound, w)) return widen(sum, bound);
    term = neg(div_int(mul(term, y2, w), denom, w));
    sum = add(sum, term, w);
  }
}

// atanh(z) = sum z^(2k+1)/(2k+1) for |z| <= Z < 1; tail <= Z^(2n+1) / ((2n+1)(1 - Z^2)).
Interval atanh_series(const Interval& z, Precision w) {
  const Interval z2 = sqr(z, w);
  const Dyadic zmag2 = square_mag(z);
  if (zmag2 >= Dyadic(1)) throw DomainError("atanh series needs |z| < 1");
  const Dyadic gap = Dyadic(1) - zmag2;
  Interval power = z;
  Interval sum = z;
  Dyadic power_bound = trim_up(z.mag());
  for (long k = 1;; ++k) {
    power_bound = mul_up(power_bound, zmag2);
    const Dyadic tail = div_up(power_bound, gap * Dyadic(2 * k + 1));
    if (negligible(tail, w)) return widen(sum, tail);
    power = mul(power, z2, w);
    sum = add(sum, div_int(power, 2 * k + 1, w), w);
  }
}

// Alternating series for |z| <= 1/2 (any |z| < 1 is valid, just slower).
Interval atan_series(const Interval& z, Precision w) {
  const Interval z2 = sqr(z, w);
  const Dyadic zmag2 = square_mag(z);
  Interval power = z;
  Interval sum = z;
  Dyadic power_bound = trim_up(z.mag());
  for (long k = 1;; ++k) {
    power_bound = mul_up(power_bound, zmag2);
    const Dyadic omitted = div_up(power_bound, Dyadic(2 * k + 1));
    if (negligible(omitted, w)) return widen(sum, omitted);
    power = neg(mul(power, z2, w));
    sum = add(sum, div_int(power, 2 * k + 1, w), w);
  }
}

Interval compute_log2(Precision w) {
  const Interval third = Interval::enclose(Rational(1, 3), w);
  return ldexp(atanh_series(third, w), 1);
}

Interval compute_pi(Precision w) {
  const Interval a5 = atan_series(Interval::enclose(Rational(1, 5), w), w);
  const Interval a239 = atan_series(Interval::enclose(Rational(1, 239), w), w);
  return sub(ldexp(a5, 4), ldexp(a239, 2), w);
}

Interval half_pi(Precision w) { return ldexp(const_enclosure(Constant::pi, w), -1); }

// Reduce x by the nearest multiple k of pi/2: x = y + k pi/2, |y| <= ~pi/4.
std::pair<Interval, long> reduce_quadrant(const Dyadic& x, Precision w) {
  if (x.abs() > Dyadic(1).ldexp(20)) throw DomainError("trig argument exceeds 2^20");
  const long k = std::lround(x.to_double() / (std::numbers::pi / 2));
  if (k == 0) return {Interval(x), 0};
  const Precision wk = w.plus(24);
  const Interval y = sub(Interval(x), mul(Interval(k), half_pi(wk), wk), wk);
  return {y, k};
}

long mod4(long k) { return ((k % 4) + 4) % 4; }

Interval sin_point(const Dyadic& x, Precision w) {
  const auto [y, k] = reduce_quadrant(x, w);
  switch (mod4(k)) {
    case 0: return sin_series(y, w);
    case 1: return cos_series(y, w);
    case 2: return neg(sin_series(y, w));
    default: return neg(cos_series(y, w));
  }
}

Interval cos_point(const Dyadic& x, Precision w) {
  const auto [y, k] = reduce_quadrant(x, w);
  switch (mod4(k)) {
    case 0: return cos_series(y, w);
    case 1: return neg(sin_series(y, w));
    case 2: return neg(cos_series(y, w));
    default: return sin_series(y, w);
  }
}

// Sin and cos attain +-1 at j*pi/2. For sin: j = 1 mod 4 gives +1, j = 3 mod 4 gives -1;
// for cos the residues are 0 and 2. `shift` selects which.
Interval trig_interval(const Interval& x, Precision p, long shift, Interval (*point)(const Dyadic&, Precision)) {
  const Precision w = p.plus(kGuardBits);
  if (x.is_point()) return round_out(point(x.lo(), w), p);
  const Interval unit(Dyadic(-1), Dyadic(1));
  if (x.width() >= Dyadic(7)) return unit;
  Interval r = hull(point(x.lo(), w), point(x.hi(), w));
  Dyadic lo = r.lo();
  Dyadic hi = r.hi();
  const double q = std::numbers::pi / 2;
  const long jmin = static_cast<long>(std::floor(x.lo().to_double() / q)) - 1;
  const long jmax = static_cast<long>(std::ceil(x.hi().to_double() / q)) + 1;
  const Interval hp = half_pi(w);
  for (long j = jmin; j <= jmax; ++j) {
    const long residue = mod4(j - shift);
    if (residue != 0 && residue != 2) continue;
    const Interval c = mul(Interval(j), hp, w);
    if (!c.overlaps(x)) continue;
    if (residue == 0) hi = Dyadic(1);
    else lo = Dyadic(-1);
  }
  return round_out(intersect(Interval(lo, hi), unit), p);
}

Interval log_point(const Dyadic& t, Precision w) {
  if (t.sign() <= 0) throw DomainError("log of non-positive number");
  std::int64_t exp2 = t.ilog2();
  Dyadic s = t.ldexp(-exp2);  // in [1, 2)
  if (s >= Dyadic(3).ldexp(-1)) {
    exp2 += 1;
    s = s.ldexp(-1);  // in [3/4, 1)
  }
  const Interval z = div(Interval(s - Dyadic(1)), Interval(s + Dyadic(1)), w);
  const Interval log_s = ldexp(atanh_series(z, w), 1);
  if (exp2 == 0) return log_s;
  return add(mul(Interval(static_cast<long>(exp2)), const_enclosure(Constant::log2, w.plus(32)), w), log_s, w);
}

Interval atan_point(const Dyadic& x, Precision w) {
  if (x.sign() < 0) return neg(atan_point(-x, w));
  const Dyadic half = Dyadic(1).ldexp(-1);
  if (x <= half) return atan_series(Interval(x), w);
  const Interval pi = const_enclosure(Constant::pi, w);
  if (x <= Dyadic(2)) {
    const Interval z = div(Interval(x - Dyadic(1)), Interval(x + Dyadic(1)), w);
    return add(ldexp(pi, -2), atan_series(z, w), w);
  }
  const Interval z = inv(Interval(x), w);
  return sub(ldexp(pi, -1), atan_series(z, w), w);
}

}  // namespace

Interval const_enclosure(Constant name, Precision p) {
  static std::mutex mutex;
  static std::map<std::pair<Constant, int>, Interval> cache;
  const auto key = std::make_pair(name, p.bits());
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const Precision w = p.plus(16);
  const Interval value = round_out(name == Constant::pi ? compute_pi(w) : compute_log2(w), p);
  std::lock_guard lock(mutex);
  cache.emplace(key, value);
  return value;
}

Interval sin(const Interval& x, Precision p) { return trig_interval(x, p, 1, sin_point); }

Interval cos(const Interval& x, Precision p) { return trig_interval(x, p, 0, cos_point); }

Interval log(const Interval& x, Precision p) {
  if (x.lo().sign() <= 0) throw DomainError("log of an interval that is not strictly positive: " + x.str());
  const Precision w = p.plus(kGuardBits);
  if (x.is_point()) return round_out(log_point(x.lo(), w), p);
  return round_out(Interval(log_point(x.lo(), w).lo(), log_point(x.hi(), w).hi()), p);
}

Interval atan(const Interval& x, Precision p) {
  const Precision w = p.plus(kGuardBits);
  if (x.is_point()) return round_out(atan_point(x.lo(), w), p);
  return round_out(Interval(atan_point(x.lo(), w).lo(), atan_point(x.hi(), w).hi()), p);
}

Interval enclose_elem(const Interval& x, ElementaryFn fn, Precision p) {
  switch (fn) {
    case ElementaryFn::sin: return sin(x, p);
    case ElementaryFn::cos: return cos(x, p);
    case ElementaryFn::log: return log(x, p);
    case ElementaryFn::atan: return atan(x, p);
  }
  throw std::invalid_argument("unknown elementary function");
}

}  // namespace msp::rigor
