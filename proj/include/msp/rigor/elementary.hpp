#pragma once

#include <stdexcept>

#include "msp/rigor/interval.hpp"

namespace msp::rigor {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Constant { pi, log2 };

/// Enclosure of pi or log 2 of width at most 2^(4 - bits). Memoized per precision.
///
/// log 2 = 2 atanh(1/3) summed with a geometric tail bound; pi comes from
/// Machin's formula 16 atan(1/5) - 4 atan(1/239) with alternating remainders.
Interval const_enclosure(Constant name, Precision p);
inline Interval pi_enclosure(Precision p) { return const_enclosure(Constant::pi, p); }
inline Interval log2_enclosure(Precision p) { return const_enclosure(Constant::log2, p); }

enum class ElementaryFn { sin, cos, log, atan };

// Each function returns an interval containing f(x) for every x in the
// argument. Trig arguments must satisfy |x| <= 2^20.
Interval sin(const Interval& x, Precision p);
Interval cos(const Interval& x, Precision p);
/// Requires x.lo() > 0, otherwise DomainError.
Interval log(const Interval& x, Precision p);
Interval atan(const Interval& x, Precision p);

Interval enclose_elem(const Interval& x, ElementaryFn fn, Precision p);

}  // namespace msp::rigor
