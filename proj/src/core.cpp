#include "wboot/core.hpp"

#include <string>

namespace wboot {

namespace {

void require_same_length(std::size_t n, std::size_t w, const char* where) {
  if (n != w) {
    throw DimensionError(std::string(where) + ": sample length " + std::to_string(n) +
                         " != weight length " + std::to_string(w));
  }
}

}  // namespace

double weighted_transform_sum(const Sample& sample, const WeightVector& weights,
                              const std::function<double(double)>& transform) {
  require_same_length(sample.size(), weights.size(), "weighted_transform_sum");
  double sum = 0.0;
  const std::span<const double> w = weights.values();
  for (std::size_t i = 0; i < sample.size(); ++i) sum += w[i] * transform(sample[i]);
  return sum;
}

double evaluate_statistic(const MomentStatistic& stat, const Sample& sample,
                          const WeightVector& weights) {
  require_same_length(sample.size(), weights.size(), "evaluate_statistic");
  return detail::evaluate_weighted_points(
      stat, sample.size(), [&](std::size_t i) { return sample[i]; }, weights.values());
}

double evaluate_statistic(const PairedMomentStatistic& stat, const PairedSample& sample,
                          const WeightVector& weights) {
  require_same_length(sample.size(), weights.size(), "evaluate_statistic");
  return detail::evaluate_weighted_points(
      stat, sample.size(), [&](std::size_t i) { return sample[i]; }, weights.values());
}

double weighted_correlation(const PairedSample& sample, const WeightVector& weights) {
  return evaluate_statistic(correlation_statistic(), sample, weights);
}

double plug_in_estimate(const MomentStatistic& stat, const Sample& sample) {
  return evaluate_statistic(stat, sample, uniform_weights(sample.size()));
}

double plug_in_estimate(const PairedMomentStatistic& stat, const PairedSample& sample) {
  return evaluate_statistic(stat, sample, uniform_weights(sample.size()));
}

}  // namespace wboot
