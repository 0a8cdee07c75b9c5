#include "msp/rigor/dyadic.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace msp::rigor {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  s = trim(s);
  if (!is_integer_text(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

std::int64_t parse_exponent(std::string_view s) {
  const mpz_class e = parse_integer(s);
  if (!e.fits_slong_p()) throw ParseError("exponent out of range");
  return e.get_si();
}

std::size_t bit_length(const mpz_class& m) {
  return sgn(m) == 0 ? 0 : mpz_sizeinbase(m.get_mpz_t(), 2);
}

// floor(log2 |n/d|) for n != 0, d > 0.
std::int64_t ilog2_rational(const mpz_class& n, const mpz_class& d) {
  const mpz_class an = abs(n);
  std::int64_t guess = static_cast<std::int64_t>(bit_length(an)) - static_cast<std::int64_t>(bit_length(d));
  // |n| >= d * 2^guess ?
  mpz_class lhs = an;
  mpz_class rhs = d;
  if (guess >= 0) {
    rhs <<= static_cast<mp_bitcnt_t>(guess);
  } else {
    lhs <<= static_cast<mp_bitcnt_t>(-guess);
  }
  return lhs >= rhs ? guess : guess - 1;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty number");
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(s.substr(0, slash));
    const mpz_class den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      negative = whole.front() == '-';
      whole.remove_prefix(1);
    }
    if (whole.empty() && frac.empty()) throw ParseError("not a number: '" + std::string(s) + "'");
    if ((!whole.empty() && !is_integer_text(whole)) || (!frac.empty() && !is_integer_text(frac)) ||
        (!frac.empty() && (frac.front() == '-' || frac.front() == '+'))) {
      throw ParseError("not a number: '" + std::string(s) + "'");
    }
    mpz_class digits(std::string(whole) + std::string(frac), 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational r(negative ? mpz_class(-digits) : digits, scale);
    r.canonicalize();
    return r;
  }
  return Rational(parse_integer(s));
}

std::string format_rational(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Dyadic::Dyadic(long value) : mantissa_(value) { canonicalize(); }

Dyadic::Dyadic(mpz_class mantissa, std::int64_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  canonicalize();
}

void Dyadic::canonicalize() {
  if (sgn(mantissa_) == 0) {
    exponent_ = 0;
    return;
  }
  const mp_bitcnt_t tz = mpz_scan1(mantissa_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_tdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), tz);
    exponent_ += static_cast<std::int64_t>(tz);
  }
}

Dyadic Dyadic::from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite double");
  if (value == 0.0) return Dyadic();
  int e = 0;
  const double frac = std::frexp(value, &e);  // value = frac * 2^e, 0.5 <= |frac| < 1
  constexpr int kDigits = std::numeric_limits<double>::digits;
  const double scaled = std::ldexp(frac, kDigits);  // exact integer
  mpz_class m;
  mpz_set_d(m.get_mpz_t(), scaled);
  return Dyadic(std::move(m), static_cast<std::int64_t>(e) - kDigits);
}

Dyadic Dyadic::parse(std::string_view text) {
  std::string_view s = trim(text);
  const auto star = s.find('*');
  if (star == std::string_view::npos) return Dyadic(parse_integer(s), 0);
  const std::string_view tail = trim(s.substr(star + 1));
  if (tail.size() < 3 || tail.substr(0, 2) != "2^") {
    throw ParseError("expected m*2^e, got '" + std::string(s) + "'");
  }
  return Dyadic(parse_integer(s.substr(0, star)), parse_exponent(tail.substr(2)));
}

bool Dyadic::is_dyadic(const Rational& x) {
  const mpz_class& d = x.get_den();
  return mpz_popcount(d.get_mpz_t()) == 1;
}

Dyadic Dyadic::from_rational(const Rational& x) {
  if (!is_dyadic(x)) throw std::invalid_argument("not a dyadic rational: " + format_rational(x));
  const auto shift = static_cast<std::int64_t>(mpz_scan1(x.get_den().get_mpz_t(), 0));
  return Dyadic(x.get_num(), -shift);
}

std::int64_t Dyadic::ilog2() const {
  if (is_zero()) throw std::domain_error("ilog2 of zero");
  return exponent_ + static_cast<std::int64_t>(bit_length(mantissa_)) - 1;
}

Rational Dyadic::to_rational() const {
  if (exponent_ >= 0) {
    mpz_class n = mantissa_;
    n <<= static_cast<mp_bitcnt_t>(exponent_);
    return Rational(n);
  }
  mpz_class d = 1;
  d <<= static_cast<mp_bitcnt_t>(-exponent_);
  Rational r(mantissa_, d);
  r.canonicalize();
  return r;
}

double Dyadic::to_double() const {
  if (is_zero()) return 0.0;
  long e = 0;
  const double frac = mpz_get_d_2exp(&e, mantissa_.get_mpz_t());
  return std::ldexp(frac, static_cast<int>(e + exponent_));
}

std::string Dyadic::str() const {
  return mantissa_.get_str() + "*2^" + std::to_string(exponent_);
}

Dyadic Dyadic::ldexp(std::int64_t k) const {
  if (is_zero()) return *this;
  Dyadic r = *this;
  r.exponent_ += k;
  return r;
}

Dyadic Dyadic::abs() const { return sign() < 0 ? -*this : *this; }

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.mantissa_ = -r.mantissa_;
  return r;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.exponent_ == b.exponent_) return Dyadic(a.mantissa_ + b.mantissa_, a.exponent_);
  const Dyadic& lo = a.exponent_ < b.exponent_ ? a : b;
  const Dyadic& hi = a.exponent_ < b.exponent_ ? b : a;
  mpz_class m = hi.mantissa_;
  m <<= static_cast<mp_bitcnt_t>(hi.exponent_ - lo.exponent_);
  m += lo.mantissa_;
  return Dyadic(std::move(m), lo.exponent_);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sa != sb || sa == 0) return sa <=> sb;
  // Same nonzero sign: compare magnitudes, cheaply by bit position when possible.
  const std::int64_t la = a.ilog2();
  const std::int64_t lb = b.ilog2();
  int mag;
  if (la != lb) {
    mag = la < lb ? -1 : 1;
  } else if (a.exponent_ == b.exponent_) {
    mag = sa * cmp(a.mantissa_, b.mantissa_);
  } else {
    // Align the mantissa with the larger exponent onto the finer grid.
    const bool a_coarse = a.exponent_ > b.exponent_;
    const Dyadic& coarse = a_coarse ? a : b;
    const Dyadic& fine = a_coarse ? b : a;
    mpz_class shifted;
    mpz_mul_2exp(shifted.get_mpz_t(), coarse.mantissa_.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(coarse.exponent_ - fine.exponent_));
    const int c = sa * cmp(shifted, fine.mantissa_);
    mag = a_coarse ? c : -c;
  }
  const int s = sa > 0 ? mag : -mag;
  return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::strong_ordering compare(const Dyadic& a, const Rational& b) {
  const int c = cmp(a.to_rational(), b);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

const Dyadic& min(const Dyadic& a, const Dyadic& b) { return b < a ? b : a; }
const Dyadic& max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

Dyadic round_to_grid(const Rational& x, std::int64_t quantum_exponent, Rounding dir) {
  mpz_class num = x.get_num();
  mpz_class den = x.get_den();
  if (quantum_exponent < 0) {
    num <<= static_cast<mp_bitcnt_t>(-quantum_exponent);
  } else {
    den <<= static_cast<mp_bitcnt_t>(quantum_exponent);
  }
  mpz_class q;
  if (dir == Rounding::down) {
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  } else {
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  return Dyadic(std::move(q), quantum_exponent);
}

Dyadic round_dir(const Rational& x, Precision p, Rounding dir) {
  if (sgn(x) == 0) return Dyadic();
  const std::int64_t lg = ilog2_rational(x.get_num(), x.get_den());
  return round_to_grid(x, std::max<std::int64_t>(0, lg) - p.bits(), dir);
}

Dyadic round_dir(const Dyadic& x, Precision p, Rounding dir) {
  if (x.is_zero()) return x;
  const std::int64_t quantum = std::max<std::int64_t>(0, x.ilog2()) - p.bits();
  if (x.exponent() >= quantum) return x;
  mpz_class m;
  const auto shift = static_cast<mp_bitcnt_t>(quantum - x.exponent());
  if (dir == Rounding::down) {
    mpz_fdiv_q_2exp(m.get_mpz_t(), x.mantissa().get_mpz_t(), shift);
  } else {
    mpz_cdiv_q_2exp(m.get_mpz_t(), x.mantissa().get_mpz_t(), shift);
  }
  return Dyadic(std::move(m), quantum);
}

}  // namespace msp::rigor
