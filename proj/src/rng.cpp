#include "wboot/rng.hpp"

#include <cmath>

namespace wboot {

double exponential_draw(SplitMix64& gen) noexcept {
  return -std::log(uniform_unit_open(gen));
}

std::pair<double, double> normal_pair(SplitMix64& gen) noexcept {
  const double u1 = uniform_unit_open(gen);
  const double u2 = uniform_unit(gen);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 6.283185307179586476925286766559 * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

std::uint64_t binomial_draw(SplitMix64& gen, std::uint64_t trials, double p) {
  if (trials == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return trials;

  // Start of the CDF walk: P(X = 0) = (1-p)^n. If that underflows (needs
  // n * -log1p(-p) > ~708), split the draw into two smaller binomials.
  const double log_q = std::log1p(-p);
  const double pmf0 = std::exp(static_cast<double>(trials) * log_q);
  if (pmf0 <= 0.0) {
    const std::uint64_t half = trials / 2;
    return binomial_draw(gen, half, p) + binomial_draw(gen, trials - half, p);
  }

  const double u = uniform_unit(gen);
  const double ratio = p / (1.0 - p);
  double pmf = pmf0;
  double cdf = pmf0;
  std::uint64_t k = 0;
  while (u > cdf && k < trials) {
    ++k;
    pmf *= ratio * static_cast<double>(trials - k + 1) / static_cast<double>(k);
    cdf += pmf;
  }
  return k;
}

}  // namespace wboot
