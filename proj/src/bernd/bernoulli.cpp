#include "msp/bernd/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace msp::bernd {

namespace {

std::mutex cache_mutex;
std::vector<Rational> cache{Rational(1), Rational(-1, 2)};  // B_0, B_1

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

Rational bernoulli(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("bernoulli: n must be even and >= 2");
  if (n > 4096) throw std::invalid_argument("bernoulli: n too large");
  const std::lock_guard<std::mutex> lock(cache_mutex);
  for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
    if (m % 2 == 1) {
      cache.emplace_back(0);
      continue;
    }
    Rational sum(0);
    for (int j = 0; j < m; ++j) {
      if (cache[j] != 0) sum += Rational(binomial(m + 1, j)) * cache[j];
    }
    Rational b = -sum / (m + 1);
    b.canonicalize();
    cache.push_back(b);
  }
  return cache[n];
}

}  // namespace msp::bernd
