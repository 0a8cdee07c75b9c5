#include "msp/paperfns/registry.hpp"

#include "msp/paperfns/gallery.hpp"
#include "msp/paperfns/lemmas.hpp"

namespace msp::paperfns {

namespace {

engine::Registry build() {
  engine::Registry r;
  r.add({"h", h_closed});
  r.add({"hprime", hprime_closed});
  r.add({"u", u_closed});
  r.add({"p_lemma1", [](const Interval& x, Precision p) { return p_poly().enclose(x, p); }});
  r.add({"flett", [](const Interval& t, Precision p) { return flett_eval(t, flett_terms(t), p); }});
  r.add({"r23", r23_enclose});
  return r;
}

}  // namespace

const engine::Registry& paper_registry() {
  static const engine::Registry registry = build();
  return registry;
}

Dyadic flett_slope() { return rigor::round_to_grid(Rational(165, 100), -16, rigor::Rounding::up); }

Dyadic h_run_start() { return rigor::round_to_grid(Rational(1, 3), -16, rigor::Rounding::down); }

}  // namespace msp::paperfns
