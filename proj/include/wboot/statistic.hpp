#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wboot/sample.hpp"

namespace wboot {

/// A statistic expressed as a combiner g over weighted transform sums
/// m_j = sum_i w_i f_j(x_i). Transforms are applied to raw data points (no
/// 1/N folded in); the uniform weight vector supplies the 1/N, so with
/// uniform weights combine(m) is the plug-in estimate.
///
/// A combiner signals an undefined value (e.g. a zero variance in a
/// denominator) by returning NaN; callers choose how to react.
template <typename Point>
class BasicMomentStatistic {
 public:
  using Transform = std::function<double(Point)>;
  using Combiner = std::function<double(std::span<const double>)>;

  BasicMomentStatistic(std::string name, std::vector<Transform> transforms, Combiner combiner)
      : name_(std::move(name)), transforms_(std::move(transforms)), combiner_(std::move(combiner)) {
    if (transforms_.empty()) {
      throw std::invalid_argument("MomentStatistic: need at least one transform");
    }
    if (!combiner_) throw std::invalid_argument("MomentStatistic: combiner must be callable");
  }

  [[nodiscard]] const std::string& name() const noexcept { return name_; }

  /// Number of moments k.
  [[nodiscard]] std::size_t moment_count() const noexcept { return transforms_.size(); }

  [[nodiscard]] double transform(std::size_t j, Point p) const { return transforms_[j](p); }

  [[nodiscard]] double combine(std::span<const double> moments) const { return combiner_(moments); }

 private:
  std::string name_;
  std::vector<Transform> transforms_;
  Combiner combiner_;
};

using MomentStatistic = BasicMomentStatistic<double>;
using PairedMomentStatistic = BasicMomentStatistic<PairPoint>;

/// Sample mean: k=1, f(x) = x, g = identity.
MomentStatistic mean_statistic();

/// Raw second moment: k=1, f(x) = x^2.
MomentStatistic second_raw_moment_statistic();

/// Plug-in variance: k=2, g(m1, m2) = m2 - m1^2.
MomentStatistic variance_statistic();

/// Pearson correlation over the five moments (z, y, z^2, y^2, z*y).
PairedMomentStatistic correlation_statistic();

/// Correlation from weighted moments, guarded: variance brackets are clamped
/// at zero before the square root, a variance at or below 1e-300 yields NaN
/// (undefined statistic), and the result is clamped into [-1, 1].
double correlation_from_moments(double mean_z, double mean_y, double mom_zz, double mom_yy,
                                double mom_zy) noexcept;

/// Variance terms at or below this fraction of the raw second moment make a
/// correlation undefined: below it the bracket mom_zz - mean_z^2 is
/// cancellation noise, not signal.
inline constexpr double kVarianceFloor = 1e-13;

}  // namespace wboot
