#include "msp/harmonic/rearrangement.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace msp::harmonic {

namespace {

void check_shape(const std::vector<double>& v, const char* name, bool increasing) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(v[i] >= 0)) throw InvalidGrid(std::string(name) + " has a negative cell " + std::to_string(i));
    if (v[i] != v[(n - i) % n]) throw InvalidGrid(std::string(name) + " is not even at cell " + std::to_string(i));
  }
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (increasing ? v[i] > v[i + 1] : v[i] < v[i + 1]) {
      throw InvalidGrid(std::string(name) + (increasing ? " decreases" : " increases") + " at cell " +
                        std::to_string(i + 1));
    }
  }
}

}  // namespace

void validate(const CircleGrid& grid) {
  const std::size_t n = grid.size();
  if (n == 0 || n % 2 != 0) throw InvalidGrid("cell count must be even and positive");
  if (grid.G.size() != n) throw InvalidGrid("F and G differ in length");
  check_shape(grid.F, "F", true);
  check_shape(grid.G, "G", false);
}

RearrangementResult rearrangement_check(const CircleGrid& grid, const std::vector<std::size_t>& T) {
  validate(grid);
  const std::size_t n = grid.size();
  if (T.size() != n) throw std::invalid_argument("permutation length differs from the grid");
  std::vector<bool> seen(n, false);
  for (std::size_t j : T) {
    if (j >= n || seen[j]) throw std::invalid_argument("T is not a permutation");
    seen[j] = true;
  }
  double lhs = 0, rhs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    lhs += grid.F[i] * grid.G[i];
    rhs += grid.F[i] * grid.G[T[i]];
  }
  return {lhs, rhs, lhs <= rhs + 1e-12};
}

TrialSummary rearrangement_exhaustive(const CircleGrid& grid) {
  validate(grid);
  if (grid.size() > 10) throw std::invalid_argument("exhaustive check limited to 10 cells");
  std::vector<std::size_t> T(grid.size());
  std::iota(T.begin(), T.end(), 0);
  TrialSummary s;
  do {
    ++s.trials;
    if (!rearrangement_check(grid, T).ok) ++s.violations;
  } while (std::next_permutation(T.begin(), T.end()));
  return s;
}

CircleGrid random_grid(std::size_t N, std::mt19937_64& rng) {
  if (N == 0 || N % 2 != 0) throw InvalidGrid("cell count must be even and positive");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> f(N / 2 + 1), g(N / 2 + 1);
  for (double& x : f) x = unit(rng);
  for (double& x : g) x = unit(rng);
  std::sort(f.begin(), f.end());
  std::sort(g.begin(), g.end(), std::greater<>());
  CircleGrid grid{std::vector<double>(N), std::vector<double>(N)};
  for (std::size_t i = 0; i <= N / 2; ++i) {
    grid.F[i] = grid.F[(N - i) % N] = f[i];
    grid.G[i] = grid.G[(N - i) % N] = g[i];
  }
  return grid;
}

TrialSummary rearrangement_random(std::size_t N, std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> T(N);
  TrialSummary s;
  for (std::size_t k = 0; k < trials; ++k) {
    const CircleGrid grid = random_grid(N, rng);
    std::iota(T.begin(), T.end(), 0);
    std::shuffle(T.begin(), T.end(), rng);
    ++s.trials;
    if (!rearrangement_check(grid, T).ok) ++s.violations;
  }
  return s;
}

}  // namespace msp::harmonic
