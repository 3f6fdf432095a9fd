#pragma once

#include "wboot/engine.hpp"
#include "wboot/sample.hpp"
#include "wboot/statistic.hpp"
#include "wboot/weights.hpp"

namespace wboot {

/// Classic resampling bootstrap: replicate b draws N indices with
/// replacement from its own stream (stream b of the master seed, the same
/// assignment rule as the engine), materializes the resampled dataset, and
/// evaluates the statistic on it with uniform weights. Deliberately naive;
/// this is the reference the engine is checked and benchmarked against.
ReplicationVector bootstrap_resample_loop(const MomentStatistic& stat, const Sample& sample,
                                          const BootstrapConfig& config);
ReplicationVector bootstrap_resample_loop(const PairedMomentStatistic& stat,
                                          const PairedSample& sample,
                                          const BootstrapConfig& config);

/// Resampling bootstrap driven by an explicit count matrix: each column is
/// expanded to its resampled dataset and evaluated with uniform weights.
/// Exists to test the count/resample identity end to end against the
/// vectorized engine on shared randomness.
ReplicationVector bootstrap_resample_from_counts(const MomentStatistic& stat,
                                                 const Sample& sample, const CountMatrix& counts,
                                                 NanPolicy nan_policy = NanPolicy::record);
ReplicationVector bootstrap_resample_from_counts(const PairedMomentStatistic& stat,
                                                 const PairedSample& sample,
                                                 const CountMatrix& counts,
                                                 NanPolicy nan_policy = NanPolicy::record);

}  // namespace wboot
