#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "wboot/rng.hpp"
#include "wboot/sample.hpp"

namespace wboot {

/// Synthetic paired data: z_i standard normal, y_i = z_i + independent
/// standard normal noise. Population correlation is 1/sqrt(2).
PairedSample simulate_pairs(std::size_t n, RngSpec rng);

enum class BenchMethod {
  vectorized,     ///< multinomial weight engine
  baseline_loop,  ///< data-resampling loop
  dirichlet,      ///< Bayesian-weight engine
};

const char* to_string(BenchMethod method);

enum class SweepStatistic { mean, correlation };

const char* to_string(SweepStatistic statistic);

struct TimingRecord {
  BenchMethod method = BenchMethod::vectorized;
  std::size_t sample_size = 0;   ///< N
  std::size_t replications = 0;  ///< B
  double seconds = 0.0;          ///< median of seconds_all
  std::size_t repeats = 0;
  std::vector<double> seconds_all;
  bool failed = false;
  std::string error;
};

struct SweepSpec {
  std::vector<std::size_t> sample_sizes;       ///< Ns
  std::vector<std::size_t> replication_counts; ///< Bs
  SweepStatistic statistic = SweepStatistic::correlation;
  std::size_t repeats = 5;
  std::size_t warmups = 1;
  std::uint64_t master_seed = 0;
  std::vector<BenchMethod> methods = {BenchMethod::vectorized, BenchMethod::baseline_loop};
};

/// The default grid: Ns 15, 115, ..., 915 and Bs 10^4, 10^5, 10^6.
SweepSpec default_sweep();

/// Monotonic wall clock in seconds.
double steady_seconds();

using TimerFn = std::function<double()>;
using RecordFn = std::function<void(const TimingRecord&)>;

/// Times every (N, B, method) cell in deterministic order: per cell,
/// `warmups` discarded runs then `repeats` timed runs, median reported.
/// All methods in a cell bootstrap the same simulated dataset. Only
/// replicate generation sits between the timer reads. A cell that throws
/// (e.g. over the memory budget) is recorded as failed and the sweep
/// continues. `timer` defaults to steady_seconds; tests may inject one.
std::vector<TimingRecord> run_sweep(const SweepSpec& spec, const TimerFn& timer = {},
                                    const RecordFn& on_record = {});

struct RatioRow {
  std::size_t sample_size = 0;
  std::size_t replications = 0;
  double ratio = 0.0;      ///< baseline seconds / vectorized seconds
  double log_ratio = 0.0;  ///< natural log
  bool complete = false;   ///< both counterparts present and usable
};

/// Baseline-over-vectorized timing ratios per (N, B) cell. Cells missing a
/// counterpart (or with a failed side) come back flagged, not dropped.
std::vector<RatioRow> ratio_table(std::span<const TimingRecord> records);

/// Median of an unordered list (mean of the middle pair for even sizes).
double median(std::vector<double> values);

}  // namespace wboot
