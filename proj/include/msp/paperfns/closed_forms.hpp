#pragma once

#include "msp/rigor/elementary.hpp"
#include "msp/rigor/interval.hpp"

namespace msp::paperfns {

using rigor::Dyadic;
using rigor::DomainError;
using rigor::Interval;
using rigor::Precision;
using rigor::Rational;

// Boundary function of the main inequality and its deficit from phi = 0:
//   u(phi) = cos(2phi) log(2cos(phi/2)) + (phi/2) sin(2phi) - cos(phi) + 1/2
//   h(phi) = u(0) - u(phi)
// All three require phi inside (-pi, pi) and throw DomainError when the
// enclosure of cos(phi/2) is not positive.
Interval u_closed(const Interval& phi, Precision p);
Interval h_closed(const Interval& phi, Precision p);

/// h'(phi) = -sin(phi) - sin(2phi)/2 - phi cos(2phi) + 2 sin(2phi) log(2cos(phi/2))
///           + cos(2phi) tan(phi/2) / 2
Interval hprime_closed(const Interval& phi, Precision p);

// Plain double versions for the approximation tier.
double u_value(double phi);
double h_value(double phi);
double hprime_value(double phi);

}  // namespace msp::paperfns
