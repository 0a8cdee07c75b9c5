#pragma once

#include "msp/engine/certify.hpp"
#include "msp/paperfns/closed_forms.hpp"

namespace msp::paperfns {

/// The named functions certificates may refer to:
/// h, hprime, u, p_lemma1, flett, r23.
const engine::Registry& paper_registry();

// Slope bounds used with these functions.
/// |h'| < 20 on [1/3, 3].
inline Dyadic h_slope() { return Dyadic(20); }
/// |F'| <= zeta(2) < 1.65; 1.65 is not dyadic, so this is 1.65 rounded up to 2^-16.
Dyadic flett_slope();

/// Largest dyadic on the 2^-16 grid below 1/3: the left end of the h run.
Dyadic h_run_start();

}  // namespace msp::paperfns
