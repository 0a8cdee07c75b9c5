#include "msp/bernd/linlog2.hpp"

#include <stdexcept>

#include "msp/rigor/elementary.hpp"

namespace msp::bernd {

LinLog2& LinLog2::operator+=(const LinLog2& o) {
  p += o.p;
  q += o.q;
  return *this;
}

LinLog2& LinLog2::operator-=(const LinLog2& o) {
  p -= o.p;
  q -= o.q;
  return *this;
}

LinLog2& LinLog2::operator*=(const Rational& c) {
  p *= c;
  q *= c;
  return *this;
}

Interval LinLog2::enclose(Precision prec) const {
  const Interval lp = Interval::enclose(p, prec);
  if (q == 0) return lp;
  return rigor::add(lp, rigor::mul(Interval::enclose(q, prec), rigor::log2_enclosure(prec), prec), prec);
}

double LinLog2::to_double() const { return enclose(Precision(128)).mid_double(); }

std::string LinLog2::str() const {
  std::string out = rigor::format_rational(p);
  if (q >= 0) {
    out += " + " + rigor::format_rational(q);
  } else {
    out += " - " + rigor::format_rational(-q);
  }
  return out + "*log2";
}

Sign linlog2_sign(const LinLog2& x, Precision start) {
  if (x.q == 0) {
    const int s = sgn(x.p);
    return s > 0 ? Sign::positive : s < 0 ? Sign::negative : Sign::zero;
  }
  // log 2 is irrational, so p + q log 2 != 0 and refinement terminates.
  for (int bits = start.bits(); bits <= (1 << 20); bits *= 2) {
    const Interval v = x.enclose(Precision(bits));
    if (v.positive()) return Sign::positive;
    if (v.negative()) return Sign::negative;
  }
  throw std::runtime_error("linlog2_sign: no decision at 2^20 bits for " + x.str());
}

const char* to_string(Sign s) {
  switch (s) {
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::positive: return "positive";
  }
  return "?";
}

}  // namespace msp::bernd
