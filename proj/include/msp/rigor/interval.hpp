#pragma once

#include <stdexcept>
#include <string>

#include "msp/rigor/dyadic.hpp"

namespace msp::rigor {

class DivisionByIntervalContainingZero : public std::domain_error {
 public:
  DivisionByIntervalContainingZero() : std::domain_error("division by an interval containing zero") {}
};

/// Closed interval [lo, hi] with exact dyadic endpoints.
class Interval {
 public:
  Interval() = default;
  Interval(Dyadic point);  // NOLINT(google-explicit-constructor)
  Interval(long point) : Interval(Dyadic(point)) {}  // NOLINT(google-explicit-constructor)
  Interval(Dyadic lo, Dyadic hi);

  /// Tightest enclosure of x at precision p (a point when x is representable).
  static Interval enclose(const Rational& x, Precision p);

  const Dyadic& lo() const noexcept { return lo_; }
  const Dyadic& hi() const noexcept { return hi_; }

  Dyadic width() const { return hi_ - lo_; }
  /// max |x| over the interval.
  Dyadic mag() const;
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Dyadic& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Rational& x) const;
  bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool positive() const { return lo_.sign() > 0; }
  bool negative() const { return hi_.sign() < 0; }
  bool overlaps(const Interval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }

  /// Exact midpoint (dyadics are closed under halving).
  Dyadic midpoint() const { return (lo_ + hi_).ldexp(-1); }
  double mid_double() const { return midpoint().to_double(); }

  std::string str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Dyadic lo_;
  Dyadic hi_;
};

Interval hull(const Interval& x, const Interval& y);
/// Intersection; throws std::domain_error if empty.
Interval intersect(const Interval& x, const Interval& y);

// Exact operations.
Interval neg(const Interval& x);
Interval ldexp(const Interval& x, std::int64_t k);
Interval abs(const Interval& x);

// Outward-rounded operations at precision p.
Interval round_out(const Interval& x, Precision p);
Interval add(const Interval& x, const Interval& y, Precision p);
Interval sub(const Interval& x, const Interval& y, Precision p);
Interval mul(const Interval& x, const Interval& y, Precision p);
Interval div(const Interval& x, const Interval& y, Precision p);
Interval sqr(const Interval& x, Precision p);
Interval pow(const Interval& x, unsigned n, Precision p);
Interval inv(const Interval& x, Precision p);

}  // namespace msp::rigor
