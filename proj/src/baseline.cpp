#include "wboot/baseline.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "wboot/core.hpp"
#include "wboot/errors.hpp"
#include "wboot/rng.hpp"
#include "wboot/sampling.hpp"

namespace wboot {

namespace {

void record_or_fail(ReplicationVector& out, std::size_t replicate, NanPolicy policy) {
  if (policy == NanPolicy::fail) {
    throw UndefinedStatisticError("bootstrap replicate " + std::to_string(replicate) +
                                  ": statistic undefined (degenerate resample)");
  }
  ++out.nan_count;
}

std::size_t draw_index(SplitMix64& gen, std::size_t n) {
  std::size_t idx = static_cast<std::size_t>(uniform_unit(gen) * static_cast<double>(n));
  if (idx >= n) idx = n - 1;
  return idx;
}

template <typename Point, typename SampleT>
ReplicationVector resample_loop_impl(const BasicMomentStatistic<Point>& stat,
                                     const SampleT& sample, const BootstrapConfig& config) {
  if (config.replications == 0) {
    throw std::invalid_argument("BootstrapConfig: replications must be >= 1");
  }
  const std::size_t n = sample.size();
  const std::vector<double> uniform(n, 1.0 / static_cast<double>(n));
  std::vector<Point> resample(n);

  ReplicationVector out;
  out.values.resize(config.replications);
  for (std::size_t b = 0; b < config.replications; ++b) {
    SplitMix64 gen = make_stream(RngSpec{config.master_seed, b});
    for (std::size_t i = 0; i < n; ++i) resample[i] = sample[draw_index(gen, n)];
    const double value = detail::evaluate_weighted_points(
        stat, n, [&](std::size_t i) { return resample[i]; }, uniform);
    if (std::isnan(value)) record_or_fail(out, b, config.nan_policy);
    out.values[b] = value;
  }
  return out;
}

template <typename Point, typename SampleT>
ReplicationVector from_counts_impl(const BasicMomentStatistic<Point>& stat, const SampleT& sample,
                                   const CountMatrix& counts, NanPolicy policy) {
  if (counts.rows() != sample.size()) {
    throw DimensionError("bootstrap_resample_from_counts: count matrix has " +
                         std::to_string(counts.rows()) + " rows, sample has " +
                         std::to_string(sample.size()));
  }
  const WeightVector uniform = uniform_weights(sample.size());
  ReplicationVector out;
  out.values.resize(counts.columns());
  for (std::size_t b = 0; b < counts.columns(); ++b) {
    const auto expanded = expand_counts_to_resample(sample, counts.column(b));
    const double value = evaluate_statistic(stat, expanded, uniform);
    if (std::isnan(value)) record_or_fail(out, b, policy);
    out.values[b] = value;
  }
  return out;
}

}  // namespace

ReplicationVector bootstrap_resample_loop(const MomentStatistic& stat, const Sample& sample,
                                          const BootstrapConfig& config) {
  return resample_loop_impl(stat, sample, config);
}

ReplicationVector bootstrap_resample_loop(const PairedMomentStatistic& stat,
                                          const PairedSample& sample,
                                          const BootstrapConfig& config) {
  return resample_loop_impl(stat, sample, config);
}

ReplicationVector bootstrap_resample_from_counts(const MomentStatistic& stat,
                                                 const Sample& sample, const CountMatrix& counts,
                                                 NanPolicy nan_policy) {
  return from_counts_impl(stat, sample, counts, nan_policy);
}

ReplicationVector bootstrap_resample_from_counts(const PairedMomentStatistic& stat,
                                                 const PairedSample& sample,
                                                 const CountMatrix& counts, NanPolicy nan_policy) {
  return from_counts_impl(stat, sample, counts, nan_policy);
}

}  // namespace wboot
