#include "wboot/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

#include "wboot/baseline.hpp"
#include "wboot/engine.hpp"
#include "wboot/statistic.hpp"

namespace wboot {

namespace {

void fill_standard_normals(SplitMix64& gen, std::vector<double>& out) {
  std::size_t i = 0;
  while (i + 1 < out.size()) {
    const auto [a, b] = normal_pair(gen);
    out[i++] = a;
    out[i++] = b;
  }
  if (i < out.size()) out[i] = normal_pair(gen).first;
}

}  // namespace

PairedSample simulate_pairs(std::size_t n, RngSpec rng) {
  if (n < 2) throw std::invalid_argument("simulate_pairs: need n >= 2");
  SplitMix64 gen = make_stream(rng);
  std::vector<double> z(n);
  std::vector<double> noise(n);
  fill_standard_normals(gen, z);
  fill_standard_normals(gen, noise);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = z[i] + noise[i];
  return PairedSample(std::move(z), std::move(y));
}

const char* to_string(BenchMethod method) {
  switch (method) {
    case BenchMethod::vectorized: return "vectorized";
    case BenchMethod::baseline_loop: return "baseline-loop";
    case BenchMethod::dirichlet: return "dirichlet";
  }
  return "?";
}

const char* to_string(SweepStatistic statistic) {
  return statistic == SweepStatistic::mean ? "mean" : "correlation";
}

SweepSpec default_sweep() {
  SweepSpec spec;
  for (std::size_t n = 15; n <= 915; n += 100) spec.sample_sizes.push_back(n);
  spec.replication_counts = {10'000, 100'000, 1'000'000};
  return spec;
}

double steady_seconds() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median: empty list");
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size();
  if (m % 2 == 1) return values[m / 2];
  return 0.5 * (values[m / 2 - 1] + values[m / 2]);
}

namespace {

// Keeps results observable so the timed calls cannot be discarded.
double g_bench_sink = 0.0;

template <typename RunFn>
TimingRecord time_cell(BenchMethod method, std::size_t n, std::size_t b, const SweepSpec& spec,
                       const TimerFn& timer, RunFn&& run) {
  TimingRecord record;
  record.method = method;
  record.sample_size = n;
  record.replications = b;
  record.repeats = spec.repeats;
  try {
    for (std::size_t w = 0; w < spec.warmups; ++w) g_bench_sink += run();
    record.seconds_all.reserve(spec.repeats);
    for (std::size_t r = 0; r < spec.repeats; ++r) {
      const double t0 = timer();
      const double sink = run();
      const double t1 = timer();
      g_bench_sink += sink;
      record.seconds_all.push_back(t1 - t0);
    }
    record.seconds = median(record.seconds_all);
  } catch (const std::exception& e) {
    record.failed = true;
    record.error = e.what();
    record.seconds = std::numeric_limits<double>::quiet_NaN();
    record.seconds_all.clear();
  }
  return record;
}

}  // namespace

std::vector<TimingRecord> run_sweep(const SweepSpec& spec, const TimerFn& timer_arg,
                                    const RecordFn& on_record) {
  if (spec.sample_sizes.empty() || spec.replication_counts.empty()) {
    throw std::invalid_argument("SweepSpec: Ns and Bs must be nonempty");
  }
  if (spec.repeats == 0) throw std::invalid_argument("SweepSpec: repeats must be >= 1");
  if (spec.methods.empty()) throw std::invalid_argument("SweepSpec: methods must be nonempty");
  const TimerFn timer = timer_arg ? timer_arg : TimerFn(steady_seconds);

  // Data streams live under a derived master seed so they never collide
  // with the per-replicate bootstrap streams.
  const std::uint64_t data_seed = mix64(spec.master_seed ^ 0x5bd1e995u);

  std::vector<TimingRecord> records;
  records.reserve(spec.sample_sizes.size() * spec.replication_counts.size() *
                  spec.methods.size());
  for (std::size_t ni = 0; ni < spec.sample_sizes.size(); ++ni) {
    const std::size_t n = spec.sample_sizes[ni];
    if (n < 2) throw std::invalid_argument("SweepSpec: sample sizes must be >= 2");
    const PairedSample pair = simulate_pairs(n, RngSpec{data_seed, ni});
    const Sample univariate(std::vector<double>(pair.z().begin(), pair.z().end()));
    const MomentStatistic scalar_stat = mean_statistic();
    const PairedMomentStatistic paired_stat = correlation_statistic();

    for (const std::size_t b : spec.replication_counts) {
      if (b == 0) throw std::invalid_argument("SweepSpec: replication counts must be >= 1");
      for (const BenchMethod method : spec.methods) {
        BootstrapConfig config;
        config.replications = b;
        config.master_seed = spec.master_seed;
        config.method =
            method == BenchMethod::dirichlet ? WeightSource::dirichlet : WeightSource::multinomial;

        auto run = [&]() -> double {
          ReplicationVector reps;
          if (method == BenchMethod::baseline_loop) {
            reps = spec.statistic == SweepStatistic::mean
                       ? bootstrap_resample_loop(scalar_stat, univariate, config)
                       : bootstrap_resample_loop(paired_stat, pair, config);
          } else {
            reps = spec.statistic == SweepStatistic::mean
                       ? bootstrap_vectorized(scalar_stat, univariate, config)
                       : bootstrap_correlation_vectorized(pair, config);
          }
          const double head = reps.values.front();
          return std::isfinite(head) ? head : 0.0;
        };

        records.push_back(time_cell(method, n, b, spec, timer, run));
        if (on_record) on_record(records.back());
      }
    }
  }
  return records;
}

std::vector<RatioRow> ratio_table(std::span<const TimingRecord> records) {
  struct CellTimes {
    double baseline = std::numeric_limits<double>::quiet_NaN();
    double vectorized = std::numeric_limits<double>::quiet_NaN();
  };
  std::vector<std::pair<std::size_t, std::size_t>> order;
  std::map<std::pair<std::size_t, std::size_t>, CellTimes> cells;
  for (const TimingRecord& r : records) {
    if (r.method == BenchMethod::dirichlet) continue;
    const auto key = std::make_pair(r.sample_size, r.replications);
    if (!cells.contains(key)) order.push_back(key);
    CellTimes& cell = cells[key];
    const double value = r.failed ? std::numeric_limits<double>::quiet_NaN() : r.seconds;
    if (r.method == BenchMethod::baseline_loop) cell.baseline = value;
    if (r.method == BenchMethod::vectorized) cell.vectorized = value;
  }

  std::vector<RatioRow> rows;
  rows.reserve(order.size());
  for (const auto& key : order) {
    const CellTimes& cell = cells[key];
    RatioRow row;
    row.sample_size = key.first;
    row.replications = key.second;
    if (std::isfinite(cell.baseline) && std::isfinite(cell.vectorized) &&
        cell.vectorized > 0.0) {
      row.ratio = cell.baseline / cell.vectorized;
      row.log_ratio = std::log(row.ratio);
      row.complete = true;
    } else {
      row.ratio = std::numeric_limits<double>::quiet_NaN();
      row.log_ratio = std::numeric_limits<double>::quiet_NaN();
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace wboot
