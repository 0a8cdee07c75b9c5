#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "msp/engine/rigor_fn.hpp"

namespace msp::engine {

struct SlopePiece {
  Dyadic lo;
  Dyadic hi;
  Dyadic bound;

  friend bool operator==(const SlopePiece&, const SlopePiece&) = default;
};

/// Upper bound on |f'|: a single constant, or a table of closed pieces.
class SlopeBound {
 public:
  static SlopeBound constant(Dyadic bound);
  static SlopeBound table(std::vector<SlopePiece> pieces);

  bool is_constant() const noexcept { return pieces_.empty(); }
  const Dyadic& constant_bound() const noexcept { return constant_; }
  const std::vector<SlopePiece>& pieces() const noexcept { return pieces_; }

  /// Throws std::invalid_argument unless every bound is positive and the
  /// pieces cover [a, b] without gaps.
  void validate(const Dyadic& a, const Dyadic& b) const;

  /// Largest bound among the pieces meeting [lo, hi]: a valid slope bound there.
  Dyadic max_over(const Dyadic& lo, const Dyadic& hi) const;

  friend bool operator==(const SlopeBound&, const SlopeBound&) = default;

 private:
  Dyadic constant_;
  std::vector<SlopePiece> pieces_;
};

struct CertPoint {
  Dyadic t;
  Dyadic lower;  // claimed lower bound of f(t); re-derived by the verifier

  friend bool operator==(const CertPoint&, const CertPoint&) = default;
};

/// Descending chain b = t_1 > ... > t_m >= a whose slope cones cover [a, b].
struct Certificate {
  std::string fn_name;
  Dyadic a;
  Dyadic b;
  SlopeBound slope = SlopeBound::constant(Dyadic(1));
  int precision_bits = 64;
  std::vector<CertPoint> points;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

class CertificateFormatError : public std::runtime_error {
 public:
  CertificateFormatError(int line, const std::string& what)
      : std::runtime_error("certificate line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Line-oriented `MSPCERT v1` text format.
void write_certificate(std::ostream& out, const Certificate& cert);
std::string to_text(const Certificate& cert);
Certificate read_certificate(std::istream& in);
Certificate from_text(const std::string& text);

}  // namespace msp::engine
