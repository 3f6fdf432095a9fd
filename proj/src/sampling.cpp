#include "wboot/sampling.hpp"

#include <string>
#include <vector>

#include "wboot/errors.hpp"

namespace wboot {

namespace detail {

void multinomial_column(SplitMix64& gen, std::size_t n, std::uint32_t* column) {
  for (std::size_t i = 0; i < n; ++i) column[i] = 0;
  std::uint64_t remaining = n;
  for (std::size_t i = 0; i + 1 < n && remaining > 0; ++i) {
    const double p = 1.0 / static_cast<double>(n - i);
    const std::uint64_t c = binomial_draw(gen, remaining, p);
    column[i] = static_cast<std::uint32_t>(c);
    remaining -= c;
  }
  column[n - 1] += static_cast<std::uint32_t>(remaining);
}

void dirichlet_column(SplitMix64& gen, std::size_t n, double* column) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    column[i] = exponential_draw(gen);
    sum += column[i];
  }
  for (std::size_t i = 0; i < n; ++i) column[i] /= sum;
}

}  // namespace detail

namespace {

void check_budget(std::size_t n, std::size_t b, std::size_t element_bytes, std::size_t max_bytes,
                  const char* where) {
  if (n == 0 || b == 0) throw std::invalid_argument(std::string(where) + ": N and B must be >= 1");
  const std::size_t elements = n * b;
  if (elements / n != b || elements > max_bytes / element_bytes) {
    throw CapacityError(std::string(where) + ": " + std::to_string(n) + " x " + std::to_string(b) +
                        " matrix exceeds the memory budget of " + std::to_string(max_bytes) +
                        " bytes; process B in chunks (see the bootstrap engine)");
  }
}

}  // namespace

CountMatrix sample_multinomial_counts(std::size_t n, std::size_t b, RngSpec rng,
                                      std::size_t max_bytes) {
  check_budget(n, b, sizeof(std::uint32_t), max_bytes, "sample_multinomial_counts");
  std::vector<std::uint32_t> counts(n * b);
  for (std::size_t j = 0; j < b; ++j) {
    SplitMix64 gen = make_stream(rng.stream(j));
    detail::multinomial_column(gen, n, counts.data() + j * n);
  }
  return CountMatrix(n, b, std::move(counts));
}

WeightMatrix counts_to_weights(const CountMatrix& counts) {
  const std::size_t n = counts.rows();
  const std::size_t b = counts.columns();
  std::vector<double> weights(n * b);
  const double denom = static_cast<double>(n);
  for (std::size_t j = 0; j < b; ++j) {
    const std::span<const std::uint32_t> col = counts.column(j);
    double* out = weights.data() + j * n;
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<double>(col[i]) / denom;
  }
  return WeightMatrix(n, b, std::move(weights), WeightSource::multinomial);
}

WeightMatrix sample_dirichlet_weights(std::size_t n, std::size_t b, RngSpec rng,
                                      std::size_t max_bytes) {
  check_budget(n, b, sizeof(double), max_bytes, "sample_dirichlet_weights");
  std::vector<double> weights(n * b);
  for (std::size_t j = 0; j < b; ++j) {
    SplitMix64 gen = make_stream(rng.stream(j));
    detail::dirichlet_column(gen, n, weights.data() + j * n);
  }
  return WeightMatrix(n, b, std::move(weights), WeightSource::dirichlet);
}

namespace {

void check_count_sum(std::size_t n, std::span<const std::uint32_t> counts) {
  if (counts.size() != n) {
    throw DimensionError("expand_counts_to_resample: count vector length " +
                         std::to_string(counts.size()) + " != sample length " +
                         std::to_string(n));
  }
  std::uint64_t sum = 0;
  for (const std::uint32_t c : counts) sum += c;
  if (sum != n) {
    throw ConsistencyError("expand_counts_to_resample: counts sum to " + std::to_string(sum) +
                           ", expected " + std::to_string(n));
  }
}

}  // namespace

Sample expand_counts_to_resample(const Sample& sample, std::span<const std::uint32_t> counts) {
  check_count_sum(sample.size(), counts);
  std::vector<double> values;
  values.reserve(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::uint32_t c = 0; c < counts[i]; ++c) values.push_back(sample[i]);
  }
  return Sample(std::move(values));
}

PairedSample expand_counts_to_resample(const PairedSample& sample,
                                       std::span<const std::uint32_t> counts) {
  check_count_sum(sample.size(), counts);
  std::vector<double> z;
  std::vector<double> y;
  z.reserve(sample.size());
  y.reserve(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::uint32_t c = 0; c < counts[i]; ++c) {
      z.push_back(sample.z()[i]);
      y.push_back(sample.y()[i]);
    }
  }
  return PairedSample(std::move(z), std::move(y));
}

}  // namespace wboot
