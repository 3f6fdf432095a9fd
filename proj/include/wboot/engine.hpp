#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "wboot/sample.hpp"
#include "wboot/statistic.hpp"
#include "wboot/weights.hpp"

namespace wboot {

/// What to do with replicates whose statistic is undefined (a degenerate
/// weight column, e.g. all mass on one data point).
enum class NanPolicy {
  record,  ///< store NaN, count it, keep going
  fail,    ///< throw UndefinedStatisticError
};

inline constexpr std::size_t kDefaultChunkColumns = 10'000;

struct BootstrapConfig {
  std::size_t replications = 1'000;  ///< B
  WeightSource method = WeightSource::multinomial;
  std::uint64_t master_seed = 0;
  std::size_t chunk_columns = kDefaultChunkColumns;
  NanPolicy nan_policy = NanPolicy::record;
  std::size_t max_chunk_bytes = kDefaultMatrixBudget;
};

/// The length-B vector of bootstrap replications.
struct ReplicationVector {
  std::vector<double> values;
  std::size_t nan_count = 0;
};

/// Vectorized bootstrap: per chunk of columns, build the weight matrix
/// (replicate b always draws from stream b of the master seed, so results
/// do not depend on chunk_columns or evaluation order), take one
/// transform-row product per moment, and combine column-wise. Resampled
/// datasets are never materialized.
ReplicationVector bootstrap_vectorized(const MomentStatistic& stat, const Sample& sample,
                                       const BootstrapConfig& config);
ReplicationVector bootstrap_vectorized(const PairedMomentStatistic& stat,
                                       const PairedSample& sample, const BootstrapConfig& config);

/// Pearson-correlation bootstrap over the five moment rows
/// (z, y, z^2, y^2, z*y); per column identical to weighted_correlation.
ReplicationVector bootstrap_correlation_vectorized(const PairedSample& sample,
                                                   const BootstrapConfig& config);

/// Same moment products over caller-supplied weights, one replicate per
/// column. This is the surface for driving the engine and the resampling
/// baseline from one shared count matrix.
ReplicationVector bootstrap_from_weights(const MomentStatistic& stat, const Sample& sample,
                                         const WeightMatrix& weights,
                                         NanPolicy nan_policy = NanPolicy::record);
ReplicationVector bootstrap_from_weights(const PairedMomentStatistic& stat,
                                         const PairedSample& sample, const WeightMatrix& weights,
                                         NanPolicy nan_policy = NanPolicy::record);

inline constexpr std::size_t kHistogramBins = 30;

struct BootstrapSummary {
  std::size_t count = 0;  ///< finite replicates
  std::size_t nan_count = 0;
  double mean = 0.0;
  double sd = 0.0;  ///< divisor count-1; NaN when count == 1
  double p2_5 = 0.0;
  double p25 = 0.0;
  double p50 = 0.0;
  double p75 = 0.0;
  double p97_5 = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::array<std::uint64_t, kHistogramBins> histogram{};  ///< over [min, max]
};

/// Moments, percentiles (linear interpolation) and a histogram of the finite
/// replicates. Throws EmptyDistributionError when none are finite.
BootstrapSummary bootstrap_summary(const ReplicationVector& replications);

}  // namespace wboot
