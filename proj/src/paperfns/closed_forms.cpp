#include "msp/paperfns/closed_forms.hpp"

#include <cmath>

namespace msp::paperfns {

namespace {

using rigor::add;
using rigor::mul;
using rigor::sub;

constexpr int kGuard = 16;

// Shared pieces of u, h and h'.
struct Parts {
  Precision w;
  Interval phi;
  Interval cos1, cos2, sin2, half_cos, log_term;
};

Parts parts(const Interval& phi, Precision p) {
  const Precision w = p.plus(kGuard);
  const Interval half = rigor::ldexp(phi, -1);
  const Interval half_cos = rigor::cos(half, w);
  if (!half_cos.positive()) throw DomainError("cos(phi/2) not positive for phi = " + phi.str());
  const Interval two_phi = rigor::ldexp(phi, 1);
  return {w,
          phi,
          rigor::cos(phi, w),
          rigor::cos(two_phi, w),
          rigor::sin(two_phi, w),
          half_cos,
          rigor::log(rigor::ldexp(half_cos, 1), w)};
}

}  // namespace

Interval u_closed(const Interval& phi, Precision p) {
  const Parts s = parts(phi, p);
  Interval v = mul(s.cos2, s.log_term, s.w);
  v = add(v, mul(rigor::ldexp(phi, -1), s.sin2, s.w), s.w);
  v = sub(v, s.cos1, s.w);
  v = add(v, Interval(Dyadic(1).ldexp(-1)), s.w);
  return rigor::round_out(v, p);
}

Interval h_closed(const Interval& phi, Precision p) {
  const Parts s = parts(phi, p);
  Interval v = sub(rigor::log2_enclosure(s.w), Interval(1), s.w);
  v = add(v, s.cos1, s.w);
  v = sub(v, mul(rigor::ldexp(phi, -1), s.sin2, s.w), s.w);
  v = sub(v, mul(s.cos2, s.log_term, s.w), s.w);
  return rigor::round_out(v, p);
}

Interval hprime_closed(const Interval& phi, Precision p) {
  const Parts s = parts(phi, p);
  const Interval half_tan = rigor::div(rigor::sin(rigor::ldexp(phi, -1), s.w), s.half_cos, s.w);
  Interval v = neg(rigor::sin(phi, s.w));
  v = sub(v, rigor::ldexp(s.sin2, -1), s.w);
  v = sub(v, mul(phi, s.cos2, s.w), s.w);
  v = add(v, rigor::ldexp(mul(s.sin2, s.log_term, s.w), 1), s.w);
  v = add(v, rigor::ldexp(mul(s.cos2, half_tan, s.w), -1), s.w);
  return rigor::round_out(v, p);
}

double u_value(double phi) {
  return std::cos(2 * phi) * std::log(2 * std::cos(phi / 2)) + phi / 2 * std::sin(2 * phi) - std::cos(phi) + 0.5;
}

double h_value(double phi) {
  return std::log(2.0) - 1 + std::cos(phi) - phi / 2 * std::sin(2 * phi) -
         std::cos(2 * phi) * std::log(2 * std::cos(phi / 2));
}

double hprime_value(double phi) {
  return -std::sin(phi) - std::sin(2 * phi) / 2 - phi * std::cos(2 * phi) +
         2 * std::sin(2 * phi) * std::log(2 * std::cos(phi / 2)) + std::cos(2 * phi) * std::tan(phi / 2) / 2;
}

}  // namespace msp::paperfns
