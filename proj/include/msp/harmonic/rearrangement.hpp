#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace msp::harmonic {

// Step functions on N equal arcs; cell i is centred at angle 2 pi i / N, so
// cell N - i mirrors cell i and cell N/2 sits at pi. F must be even and
// non-decreasing from cell 0 to N/2, G even and non-increasing, both >= 0.
struct CircleGrid {
  std::vector<double> F;
  std::vector<double> G;

  std::size_t size() const { return F.size(); }
};

class InvalidGrid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void validate(const CircleGrid& grid);

struct RearrangementResult {
  double lhs;
  double rhs;
  bool ok;
};

/// lhs = sum F_i G_i, rhs = sum F_i G_{T(i)}; ok when lhs <= rhs + 1e-12.
RearrangementResult rearrangement_check(const CircleGrid& grid, const std::vector<std::size_t>& T);

struct TrialSummary {
  std::size_t trials = 0;
  std::size_t violations = 0;
};

/// Every permutation of the cells; limited to N <= 10.
TrialSummary rearrangement_exhaustive(const CircleGrid& grid);

/// Random admissible grid with values in [0, 1).
CircleGrid random_grid(std::size_t N, std::mt19937_64& rng);

/// `trials` independent random grids and permutations from one seed.
TrialSummary rearrangement_random(std::size_t N, std::size_t trials, std::uint64_t seed);

}  // namespace msp::harmonic
