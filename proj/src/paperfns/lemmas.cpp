#include "msp/paperfns/lemmas.hpp"

#include <bit>
#include <stdexcept>

namespace msp::paperfns {

namespace {

LinLog2 lin(long p, long q) { return {Rational(p), Rational(q)}; }

Sign exact_sign(const PolyLinLog2& poly, const Dyadic& x) { return bernd::linlog2_sign(poly.eval(x.to_rational())); }

}  // namespace

LinLog2 PolyLinLog2::eval(const Rational& x) const {
  LinLog2 acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + *it;
    acc.p.canonicalize();
    acc.q.canonicalize();
  }
  return acc;
}

Interval PolyLinLog2::enclose(const Interval& x, Precision p) const {
  Interval acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = rigor::add(rigor::mul(acc, x, p), it->enclose(p), p);
  }
  return acc;
}

PolyLinLog2 p_poly() {
  return {{lin(-31680, 46080), lin(0, 0), lin(7380, -12480), lin(0, 0), lin(-1947, -1020), lin(0, 0), lin(-212, 20),
           lin(0, 0), lin(4, 0)}};
}

PolyLinLog2 denominator_poly() { return {{lin(23040, 0), lin(0, 0), lin(1440, 0), lin(0, 0), lin(-30, 0)}}; }

LinLog2 p_eval(const Rational& x) { return p_poly().eval(x); }

std::vector<Interval> poly_roots(const PolyLinLog2& poly, const Dyadic& lo, const Dyadic& hi, const Dyadic& tol,
                                 int grid) {
  if (!(lo < hi)) throw std::invalid_argument("poly_roots needs lo < hi");
  if (tol.sign() <= 0) throw std::invalid_argument("poly_roots needs tol > 0");
  if (grid < 1 || (grid & (grid - 1)) != 0) throw std::invalid_argument("grid must be a power of two");
  const std::int64_t grid_log = std::bit_width(static_cast<unsigned>(grid)) - 1;
  const Dyadic step = (hi - lo).ldexp(-grid_log);

  std::vector<Interval> roots;
  Dyadic a = lo;
  Sign sa = exact_sign(poly, a);
  if (sa == Sign::zero) roots.emplace_back(a);
  for (int i = 1; i <= grid; ++i) {
    const Dyadic b = i == grid ? hi : lo + step * Dyadic(i);
    const Sign sb = exact_sign(poly, b);
    if (sb == Sign::zero) {
      roots.emplace_back(b);
    } else if (sa != Sign::zero && sa != sb) {
      Dyadic x = a;
      Dyadic y = b;
      while (y - x > tol) {
        const Dyadic mid = (x + y).ldexp(-1);
        const Sign sm = exact_sign(poly, mid);
        if (sm == Sign::zero) {
          x = y = mid;
        } else if (sm == sa) {
          x = mid;
        } else {
          y = mid;
        }
      }
      roots.emplace_back(x, y);
    }
    a = b;
    sa = sb;
  }
  return roots;
}

std::vector<Interval> p_roots(const Dyadic& lo, const Dyadic& hi, const Dyadic& tol) {
  return poly_roots(p_poly(), lo, hi, tol);
}

bool poly_positive_on(const PolyLinLog2& poly, const Dyadic& lo, const Dyadic& hi, Precision p, int max_depth) {
  struct Box {
    Dyadic lo, hi;
    int depth;
  };
  std::vector<Box> stack{{lo, hi, 0}};
  while (!stack.empty()) {
    const Box box = stack.back();
    stack.pop_back();
    if (poly.enclose(Interval(box.lo, box.hi), p).positive()) continue;
    if (box.depth >= max_depth) return false;
    const Dyadic mid = (box.lo + box.hi).ldexp(-1);
    stack.push_back({box.lo, mid, box.depth + 1});
    stack.push_back({mid, box.hi, box.depth + 1});
  }
  return true;
}

Lemma1Result lemma1_check() {
  Lemma1Result r;
  const PolyLinLog2 p = p_poly();
  r.p_at_zero = bernd::linlog2_sign(p.eval(Rational(0)));
  r.p_at_third = bernd::linlog2_sign(p.eval(Rational(1, 3)));
  // [0, 1/3] sits inside [0, 171/512]; proving positivity there covers it.
  const Dyadic third_up = Dyadic(mpz_class(171), -9);
  const Precision prec(64);
  r.p_positive = poly_positive_on(p, Dyadic(0), third_up, prec);
  r.denominator_positive = poly_positive_on(denominator_poly(), Dyadic(0), third_up, prec);
  r.ok = r.p_at_zero == Sign::positive && r.p_at_third == Sign::positive && r.p_positive && r.denominator_positive;
  return r;
}

Interval lemma2_check(Precision p) {
  const Precision w = p.plus(16);
  const Interval two_cos = rigor::ldexp(rigor::cos(Interval(Dyadic(3).ldexp(-1)), w), 1);
  const Interval product = rigor::mul(rigor::cos(Interval(6), w), rigor::log(two_cos, w), w);
  const Interval v = rigor::sub(rigor::sub(rigor::log2_enclosure(w), Interval(2), w), product, w);
  return rigor::round_out(v, p);
}

bool lemma2_hypotheses(Precision p) {
  const Interval two_cos = rigor::ldexp(rigor::cos(Interval(Dyadic(3).ldexp(-1)), p), 1);
  const Interval cos6 = rigor::cos(Interval(6), p);
  const Interval sin6 = rigor::sin(Interval(6), p);
  const Interval cos3 = rigor::cos(Interval(3), p);
  const Dyadic one(1);
  return two_cos.positive() && two_cos.hi() < one && rigor::log(two_cos, p).negative() && cos6.positive() &&
         cos6.hi() < one && sin6.negative() && cos3.negative() && cos3.lo() > Dyadic(-1);
}

Lemma3Chain lemma3_chain_check(Precision p) {
  Lemma3Chain c;
  const Precision w = p.plus(16);
  c.two_cos = rigor::ldexp(rigor::cos(Interval(Dyadic(3).ldexp(-1)), w), 1);
  const Interval log_abs = rigor::abs(rigor::log(c.two_cos, w));
  c.log_part = rigor::ldexp(rigor::add(log_abs, rigor::pi_enclosure(w), w), 1);
  c.inv_part = rigor::inv(c.two_cos, w);
  c.bound = rigor::add(rigor::add(c.log_part, c.inv_part, w), Interval(1), w);
  c.two_cos = rigor::round_out(c.two_cos, p);
  c.log_part = rigor::round_out(c.log_part, p);
  c.inv_part = rigor::round_out(c.inv_part, p);
  c.bound = rigor::round_out(c.bound, p);
  c.ok = c.log_part.hi() < Dyadic(11) && c.inv_part.hi() < Dyadic(8) && c.bound.hi() < Dyadic(20);
  return c;
}

}  // namespace msp::paperfns
