#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "wboot/errors.hpp"
#include "wboot/sample.hpp"
#include "wboot/statistic.hpp"
#include "wboot/weights.hpp"

namespace wboot {

namespace detail {

/// Weighted moments m_j = sum_i w_i f_j(point(i)), accumulated in ascending
/// index order per moment, then combined. The engine's per-column products
/// use the same term order, so both paths agree bit for bit on equal
/// weights. Points are supplied by index so callers can evaluate resampled
/// buffers without constructing Sample objects.
template <typename Point, typename PointFn>
double evaluate_weighted_points(const BasicMomentStatistic<Point>& stat, std::size_t n,
                                PointFn&& point_at, std::span<const double> weights) {
  const std::size_t k = stat.moment_count();
  std::array<double, 8> small_buf{};
  std::vector<double> large_buf;
  double* moments = small_buf.data();
  if (k > small_buf.size()) {
    large_buf.assign(k, 0.0);
    moments = large_buf.data();
  }
  for (std::size_t j = 0; j < k; ++j) moments[j] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = point_at(i);
    const double w = weights[i];
    for (std::size_t j = 0; j < k; ++j) moments[j] += w * stat.transform(j, p);
  }
  return stat.combine(std::span<const double>(moments, k));
}

}  // namespace detail

/// sum_i w_i f(x_i); the identity transform gives the weighted mean.
double weighted_transform_sum(const Sample& sample, const WeightVector& weights,
                              const std::function<double(double)>& transform);

/// g(m_1, ..., m_k) with m_j = sum_i w_i f_j(x_i). Returns NaN when the
/// combiner is undefined on the weighted moments.
double evaluate_statistic(const MomentStatistic& stat, const Sample& sample,
                          const WeightVector& weights);
double evaluate_statistic(const PairedMomentStatistic& stat, const PairedSample& sample,
                          const WeightVector& weights);

/// Weighted Pearson correlation with the clamping guards of
/// correlation_from_moments; NaN when either weighted variance vanishes.
double weighted_correlation(const PairedSample& sample, const WeightVector& weights);

/// The statistic under uniform weights 1/N.
double plug_in_estimate(const MomentStatistic& stat, const Sample& sample);
double plug_in_estimate(const PairedMomentStatistic& stat, const PairedSample& sample);

}  // namespace wboot
