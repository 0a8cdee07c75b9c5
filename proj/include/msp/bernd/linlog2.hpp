#pragma once

#include <string>

#include "msp/rigor/interval.hpp"

namespace msp::bernd {

using rigor::Interval;
using rigor::Precision;
using rigor::Rational;

/// p + q log 2 with rational p, q.
struct LinLog2 {
  Rational p;
  Rational q;

  LinLog2() = default;
  LinLog2(Rational p_, Rational q_) : p(std::move(p_)), q(std::move(q_)) {}
  static LinLog2 log2() { return {Rational(0), Rational(1)}; }

  LinLog2& operator+=(const LinLog2& o);
  LinLog2& operator-=(const LinLog2& o);
  LinLog2& operator*=(const Rational& c);

  friend LinLog2 operator+(LinLog2 x, const LinLog2& y) { return x += y; }
  friend LinLog2 operator-(LinLog2 x, const LinLog2& y) { return x -= y; }
  friend LinLog2 operator*(LinLog2 x, const Rational& c) { return x *= c; }
  friend LinLog2 operator*(const Rational& c, LinLog2 x) { return x *= c; }
  friend LinLog2 operator-(LinLog2 x) { return x *= Rational(-1); }
  friend bool operator==(const LinLog2& x, const LinLog2& y) { return x.p == y.p && x.q == y.q; }

  /// Enclosure of the value at precision p.
  Interval enclose(Precision prec) const;
  double to_double() const;
  /// "p + q*log2" with exact rationals.
  std::string str() const;
};

enum class Sign { negative, zero, positive };

/// Exact sign. q == 0 is decided on p; otherwise the log 2 enclosure is
/// refined by doubling the precision from `start` until it separates.
Sign linlog2_sign(const LinLog2& x, Precision start = Precision(64));

const char* to_string(Sign s);

}  // namespace msp::bernd
