#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace msp::rigor {

/// Exact big rational. Always kept in canonical form (gcd 1, denominator > 0).
using Rational = mpq_class;

/// Thrown when a textual number does not parse.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parse `p/q`, a plain integer, or a finite decimal such as `1.65` exactly.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& x);

/// Working precision in bits. See round_dir() for what a bit count means.
class Precision {
 public:
  static constexpr int kMinBits = 16;

  explicit Precision(int bits) : bits_(bits) {
    if (bits < kMinBits) throw std::invalid_argument("precision must be at least 16 bits");
  }

  int bits() const noexcept { return bits_; }
  Precision plus(int extra) const { return Precision(bits_ + extra); }

  friend bool operator==(Precision, Precision) = default;

 private:
  int bits_;
};

enum class Rounding { down, up };

/// Exact binary number mantissa * 2^exponent.
///
/// Canonical form: the mantissa is odd, or the value is zero and stored as
/// 0 * 2^0. Dyadics are closed under +, - and *, so these operators are exact.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long value);  // NOLINT(google-explicit-constructor): integers are dyadic
  Dyadic(mpz_class mantissa, std::int64_t exponent);

  /// Exact conversion; throws for NaN or infinity.
  static Dyadic from_double(double value);
  /// Parse the `m*2^e` text form (a bare integer is accepted too).
  static Dyadic parse(std::string_view text);
  /// Exact conversion; throws std::invalid_argument unless the denominator is
  /// a power of two.
  static Dyadic from_rational(const Rational& x);
  static bool is_dyadic(const Rational& x);

  const mpz_class& mantissa() const noexcept { return mantissa_; }
  std::int64_t exponent() const noexcept { return exponent_; }

  int sign() const noexcept { return sgn(mantissa_); }
  bool is_zero() const noexcept { return sign() == 0; }

  /// floor(log2 |x|); requires a non-zero value.
  std::int64_t ilog2() const;

  Rational to_rational() const;
  /// Nearest double (ties resolved by GMP); approximation only.
  double to_double() const;
  std::string str() const;

  /// Exact multiplication by 2^k.
  Dyadic ldexp(std::int64_t k) const;
  Dyadic abs() const;

  Dyadic operator-() const;
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
  }

 private:
  void canonicalize();

  mpz_class mantissa_{0};
  std::int64_t exponent_ = 0;
};

std::strong_ordering compare(const Dyadic& a, const Rational& b);

const Dyadic& min(const Dyadic& a, const Dyadic& b);
const Dyadic& max(const Dyadic& a, const Dyadic& b);

/// Directed rounding to the dyadic grid of spacing 2^(max(0, floor(log2|x|)) - bits):
/// `bits` fractional bits below 1 in magnitude, `bits` significant bits above.
/// The result is <= x for `down`, >= x for `up`, and within 2^-bits * max(1, |x|).
Dyadic round_dir(const Rational& x, Precision p, Rounding dir);
Dyadic round_dir(const Dyadic& x, Precision p, Rounding dir);

/// Round to a fixed absolute grid 2^quantum_exponent.
Dyadic round_to_grid(const Rational& x, std::int64_t quantum_exponent, Rounding dir);

}  // namespace msp::rigor
