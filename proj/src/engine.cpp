#include "wboot/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "wboot/errors.hpp"
#include "wboot/rng.hpp"
#include "wboot/sampling.hpp"

namespace wboot {

namespace {

double dot(const double* row, const double* weights, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += row[i] * weights[i];
  return sum;
}

template <typename Point, typename SampleT>
std::vector<std::vector<double>> transform_rows(const BasicMomentStatistic<Point>& stat,
                                                const SampleT& sample) {
  std::vector<std::vector<double>> rows(stat.moment_count());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    rows[j].resize(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i) rows[j][i] = stat.transform(j, sample[i]);
  }
  return rows;
}

void handle_undefined(ReplicationVector& out, std::size_t replicate, NanPolicy policy) {
  if (policy == NanPolicy::fail) {
    throw UndefinedStatisticError("bootstrap replicate " + std::to_string(replicate) +
                                  ": statistic undefined (degenerate weight column)");
  }
  ++out.nan_count;
}

/// Combine the per-column moments of the weight block [first, first+len)
/// stored column-major in `weights`.
template <typename CombineFn>
void combine_block(const std::vector<std::vector<double>>& rows, const double* weights,
                   std::size_t n, std::size_t first, std::size_t len, CombineFn&& combine,
                   NanPolicy policy, ReplicationVector& out) {
  const std::size_t k = rows.size();
  std::array<double, 8> small_buf{};
  std::vector<double> large_buf;
  double* moments = small_buf.data();
  if (k > small_buf.size()) {
    large_buf.assign(k, 0.0);
    moments = large_buf.data();
  }
  for (std::size_t c = 0; c < len; ++c) {
    const double* column = weights + c * n;
    for (std::size_t j = 0; j < k; ++j) moments[j] = dot(rows[j].data(), column, n);
    const double value = combine(std::span<const double>(moments, k));
    if (std::isnan(value)) handle_undefined(out, first + c, policy);
    out.values[first + c] = value;
  }
}

template <typename CombineFn>
ReplicationVector run_chunked(const std::vector<std::vector<double>>& rows, std::size_t n,
                              CombineFn&& combine, const BootstrapConfig& config) {
  if (config.replications == 0) {
    throw std::invalid_argument("BootstrapConfig: replications must be >= 1");
  }
  if (config.chunk_columns == 0) {
    throw std::invalid_argument("BootstrapConfig: chunk_columns must be >= 1");
  }
  const std::size_t chunk = std::min(config.chunk_columns, config.replications);
  if (chunk > config.max_chunk_bytes / sizeof(double) / n) {
    throw CapacityError("bootstrap engine: a " + std::to_string(n) + " x " +
                        std::to_string(chunk) + " weight chunk exceeds the budget of " +
                        std::to_string(config.max_chunk_bytes) +
                        " bytes; lower chunk_columns");
  }

  ReplicationVector out;
  out.values.resize(config.replications);
  std::vector<double> weight_block(n * chunk);
  std::vector<std::uint32_t> count_column(n);

  for (std::size_t start = 0; start < config.replications; start += chunk) {
    const std::size_t len = std::min(chunk, config.replications - start);
    for (std::size_t c = 0; c < len; ++c) {
      double* column = weight_block.data() + c * n;
      SplitMix64 gen = make_stream(RngSpec{config.master_seed, start + c});
      if (config.method == WeightSource::multinomial) {
        detail::multinomial_column(gen, n, count_column.data());
        for (std::size_t i = 0; i < n; ++i) {
          column[i] = static_cast<double>(count_column[i]) / static_cast<double>(n);
        }
      } else {
        detail::dirichlet_column(gen, n, column);
      }
    }
    combine_block(rows, weight_block.data(), n, start, len, combine, config.nan_policy, out);
  }
  return out;
}

template <typename Point, typename SampleT>
ReplicationVector vectorized_impl(const BasicMomentStatistic<Point>& stat, const SampleT& sample,
                                  const BootstrapConfig& config) {
  const auto rows = transform_rows(stat, sample);
  return run_chunked(
      rows, sample.size(), [&](std::span<const double> m) { return stat.combine(m); }, config);
}

template <typename Point, typename SampleT>
ReplicationVector from_weights_impl(const BasicMomentStatistic<Point>& stat, const SampleT& sample,
                                    const WeightMatrix& weights, NanPolicy policy) {
  if (weights.rows() != sample.size()) {
    throw DimensionError("bootstrap_from_weights: weight matrix has " +
                         std::to_string(weights.rows()) + " rows, sample has " +
                         std::to_string(sample.size()));
  }
  const auto rows = transform_rows(stat, sample);
  ReplicationVector out;
  out.values.resize(weights.columns());
  combine_block(
      rows, weights.column(0).data(), sample.size(), 0, weights.columns(),
      [&](std::span<const double> m) { return stat.combine(m); }, policy, out);
  return out;
}

}  // namespace

ReplicationVector bootstrap_vectorized(const MomentStatistic& stat, const Sample& sample,
                                       const BootstrapConfig& config) {
  return vectorized_impl(stat, sample, config);
}

ReplicationVector bootstrap_vectorized(const PairedMomentStatistic& stat,
                                       const PairedSample& sample, const BootstrapConfig& config) {
  return vectorized_impl(stat, sample, config);
}

ReplicationVector bootstrap_correlation_vectorized(const PairedSample& sample,
                                                   const BootstrapConfig& config) {
  return vectorized_impl(correlation_statistic(), sample, config);
}

ReplicationVector bootstrap_from_weights(const MomentStatistic& stat, const Sample& sample,
                                         const WeightMatrix& weights, NanPolicy nan_policy) {
  return from_weights_impl(stat, sample, weights, nan_policy);
}

ReplicationVector bootstrap_from_weights(const PairedMomentStatistic& stat,
                                         const PairedSample& sample, const WeightMatrix& weights,
                                         NanPolicy nan_policy) {
  return from_weights_impl(stat, sample, weights, nan_policy);
}

namespace {

double percentile_sorted(const std::vector<double>& sorted, double pct) {
  const std::size_t m = sorted.size();
  if (m == 1) return sorted[0];
  const double pos = (static_cast<double>(m) - 1.0) * pct / 100.0;
  const std::size_t lo = static_cast<std::size_t>(pos);
  const double frac = pos - static_cast<double>(lo);
  if (lo + 1 >= m) return sorted[m - 1];
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

BootstrapSummary bootstrap_summary(const ReplicationVector& replications) {
  std::vector<double> finite;
  finite.reserve(replications.values.size());
  for (const double v : replications.values) {
    if (std::isfinite(v)) finite.push_back(v);
  }
  if (finite.empty()) {
    throw EmptyDistributionError("bootstrap_summary: no finite replicates");
  }
  std::sort(finite.begin(), finite.end());

  BootstrapSummary s;
  s.count = finite.size();
  s.nan_count = replications.values.size() - finite.size();
  double sum = 0.0;
  for (const double v : finite) sum += v;
  s.mean = sum / static_cast<double>(finite.size());
  double sq = 0.0;
  for (const double v : finite) sq += (v - s.mean) * (v - s.mean);
  s.sd = finite.size() > 1 ? std::sqrt(sq / static_cast<double>(finite.size() - 1))
                           : std::numeric_limits<double>::quiet_NaN();
  s.p2_5 = percentile_sorted(finite, 2.5);
  s.p25 = percentile_sorted(finite, 25.0);
  s.p50 = percentile_sorted(finite, 50.0);
  s.p75 = percentile_sorted(finite, 75.0);
  s.p97_5 = percentile_sorted(finite, 97.5);
  s.min = finite.front();
  s.max = finite.back();

  const double width = s.max - s.min;
  for (const double v : finite) {
    std::size_t bin = 0;
    if (width > 0.0) {
      bin = static_cast<std::size_t>((v - s.min) / width * kHistogramBins);
      bin = std::min(bin, kHistogramBins - 1);
    }
    ++s.histogram[bin];
  }
  return s;
}

}  // namespace wboot
