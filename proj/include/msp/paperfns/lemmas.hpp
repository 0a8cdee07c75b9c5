#pragma once

#include <vector>

#include "msp/bernd/linlog2.hpp"
#include "msp/paperfns/closed_forms.hpp"

namespace msp::paperfns {

using bernd::LinLog2;
using bernd::Sign;

/// Polynomial with LinLog2 coefficients, ascending powers.
struct PolyLinLog2 {
  std::vector<LinLog2> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  LinLog2 eval(const Rational& x) const;
  Interval enclose(const Interval& x, Precision p) const;
};

/// 4x^8 + (20 log2 - 212) x^6 - (1020 log2 + 1947) x^4 + (7380 - 12480 log2) x^2 + 46080 log2 - 31680
PolyLinLog2 p_poly();
/// 23040 + 1440 x^2 - 30 x^4
PolyLinLog2 denominator_poly();

LinLog2 p_eval(const Rational& x);

/// Sign changes of `poly` on a uniform grid of `grid` cells over [lo, hi],
/// each bisected with exact signs down to width <= tol. An exact zero on the
/// grid is returned as a point interval.
std::vector<Interval> poly_roots(const PolyLinLog2& poly, const Dyadic& lo, const Dyadic& hi, const Dyadic& tol,
                                 int grid = 1024);
std::vector<Interval> p_roots(const Dyadic& lo, const Dyadic& hi, const Dyadic& tol);

/// Proves poly > 0 on [lo, hi] by interval bisection.
bool poly_positive_on(const PolyLinLog2& poly, const Dyadic& lo, const Dyadic& hi, Precision p, int max_depth = 40);

struct Lemma1Result {
  Sign p_at_zero = Sign::zero;
  Sign p_at_third = Sign::zero;
  bool p_positive = false;            // p > 0 on [0, 1/3]
  bool denominator_positive = false;  // on [0, 1/3]
  bool ok = false;
};

/// h > 0 on (0, 1/3]: h(phi) > phi^2 p(phi) / (23040 + 1440 phi^2 - 30 phi^4).
Lemma1Result lemma1_check();

/// log 2 - 2 - cos 6 log(2 cos(3/2)): lower bound of h on [3, pi).
Interval lemma2_check(Precision p);

/// Sign facts the bound above relies on: 0 < 2cos(3/2) < 1, 0 < cos 6 < 1,
/// sin 6 < 0, -1 < cos 3 < 0.
bool lemma2_hypotheses(Precision p);

struct Lemma3Chain {
  Interval two_cos;   // |1 + e^{3i}| = 2 cos(3/2)
  Interval log_part;  // 2 (|log(2 cos(3/2))| + pi)
  Interval inv_part;  // 1 / (2 cos(3/2))
  Interval bound;     // log_part + inv_part + 1
  bool ok = false;    // log_part < 11, inv_part < 8, bound < 20
};

/// |h'| < 20 on [1/3, 3] from the crude estimate through |1 + e^{i phi}|.
Lemma3Chain lemma3_chain_check(Precision p);

}  // namespace msp::paperfns
