#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "msp/engine/certificate.hpp"

namespace msp::engine {

/// Base of the generator's failure modes; carries the point where it stopped.
class CertifyError : public std::runtime_error {
 public:
  CertifyError(const std::string& what, Dyadic point) : std::runtime_error(what), point_(std::move(point)) {}
  const Dyadic& point() const noexcept { return point_; }

 private:
  Dyadic point_;
};

/// The enclosure of f at `point` does not have a positive lower endpoint.
class CannotCertify : public CertifyError {
 public:
  CannotCertify(const std::string& what, Dyadic point, Interval enclosure)
      : CertifyError(what, std::move(point)), enclosure_(std::move(enclosure)) {}
  const Interval& enclosure() const noexcept { return enclosure_; }

 private:
  Interval enclosure_;
};

/// The next step would be shorter than 2^-(bits + 8).
class StepUnderflow : public CertifyError {
 public:
  using CertifyError::CertifyError;
};

/// More points would be needed than the caller allowed.
class PointBudgetExceeded : public CertifyError {
 public:
  using CertifyError::CertifyError;
};

/// Greedy Maximal Slope Principle descent from b to a.
///
/// At t_k the lower end l_k of the enclosure of f(t_k) must be positive; on
/// [t_k - l_k/M, t_k] f stays positive, so the next point is
/// t_k - step_fraction * l_k / M with the step rounded down to the grid
/// 2^-(bits + 8). M is the largest slope-table entry meeting the step.
/// Stops once t_k - l_k / M < a. A non-zero max_points caps the chain length.
Certificate msp_certify(const RigorFn& f, const Dyadic& a, const Dyadic& b, const SlopeBound& slope, Precision p,
                        const Rational& step_fraction = Rational(1), std::size_t max_points = 0);

/// Certifies `shards` contiguous pieces of [a, b] concurrently and merges them
/// into one certificate over [a, b]. shards == 1 is msp_certify. max_points
/// applies to each shard.
Certificate msp_certify_sharded(const RigorFn& f, const Dyadic& a, const Dyadic& b, const SlopeBound& slope,
                                Precision p, const Rational& step_fraction, unsigned shards,
                                std::size_t max_points = 0);

struct Verdict {
  bool valid = false;
  std::string reason;
  std::optional<std::size_t> index;  // offending point, when there is one

  explicit operator bool() const noexcept { return valid; }
};

/// Independent check. Every lower bound is recomputed from the registry
/// function at the certificate's precision; the recorded bounds are ignored.
/// Throws UnknownFunction.
Verdict msp_verify(const Certificate& cert, const Registry& registry);

/// The covering argument on recorded data alone, in exact arithmetic:
/// the half-open cones (t_k - l_k/M, t_k] cover [a, b].
bool coverage_holds(const Certificate& cert);

enum class SupStatus { proved, failed, depth_exceeded };

struct SupResult {
  SupStatus status = SupStatus::depth_exceeded;
  /// failed: a box whose enclosure lies outside (-threshold, threshold);
  /// depth_exceeded: the deepest undecided box.
  Interval witness;
  std::size_t boxes = 0;
};

/// Adaptive bisection proving |f| < threshold on [a, b].
SupResult bound_sup_abs(const RigorFn& f, const Dyadic& a, const Dyadic& b, const Dyadic& threshold, Precision p,
                        int max_depth);

}  // namespace msp::engine
