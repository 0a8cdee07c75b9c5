#pragma once

#include <functional>

#include "msp/rigor/dyadic.hpp"

namespace msp::bernd {

using rigor::Rational;

/// Exact B_n for even n >= 2 from sum_{j<=n} C(n+1, j) B_j = 0.
/// Results are cached; safe to call from several threads.
Rational bernoulli(int n);

/// Where coefficient code takes its Bernoulli numbers from. Tests and the
/// report swap in a corrupted source to check that failures are detected.
using BernoulliSource = std::function<Rational(int)>;

inline BernoulliSource exact_bernoulli() { return [](int n) { return bernoulli(n); }; }

}  // namespace msp::bernd
