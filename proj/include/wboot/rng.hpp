#pragma once

#include <cstdint>
#include <utility>

namespace wboot {

/// Identifies one reproducible random stream. Identical (master_seed,
/// stream_index) pairs yield identical draws; distinct stream indices under
/// one master seed give statistically independent streams.
struct RngSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;

  /// The stream `offset` positions after this one, same master seed.
  [[nodiscard]] RngSpec stream(std::uint64_t offset) const {
    return RngSpec{master_seed, stream_index + offset};
  }
};

/// Stateless 64-bit avalanche (the splitmix64 finalizer).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d4a4ca9b70cdb3ULL;
  return z ^ (z >> 31);
}

/// Counter-based generator: the state walks a Weyl sequence and each output
/// is a hash of the counter, so seeding costs nothing and any (seed) pair
/// addresses an arbitrary point of the orbit. Satisfies
/// UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

 private:
  std::uint64_t state_;
};

/// Generator positioned at the start of the stream named by `spec`.
inline SplitMix64 make_stream(RngSpec spec) noexcept {
  std::uint64_t h = mix64(spec.master_seed ^ 0x8e1f9c3a5b7d2460ULL);
  h = mix64(h + 0x9e3779b97f4a7c15ULL * (spec.stream_index + 1));
  return SplitMix64{h};
}

/// Uniform double in [0, 1), 53 random bits.
inline double uniform_unit(SplitMix64& gen) noexcept {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Uniform double strictly inside (0, 1); safe under log().
inline double uniform_unit_open(SplitMix64& gen) noexcept {
  return (static_cast<double>(gen() >> 12) + 0.5) * 0x1.0p-52;
}

/// Unit-rate exponential draw, strictly positive.
double exponential_draw(SplitMix64& gen) noexcept;

/// Two independent standard normal draws (Box-Muller).
std::pair<double, double> normal_pair(SplitMix64& gen) noexcept;

/// Binomial(n, p) by CDF inversion; exact distribution, O(np) expected time.
std::uint64_t binomial_draw(SplitMix64& gen, std::uint64_t trials, double p);

}  // namespace wboot
