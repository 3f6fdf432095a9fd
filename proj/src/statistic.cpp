#include "wboot/statistic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wboot {

double correlation_from_moments(double mean_z, double mean_y, double mom_zz, double mom_yy,
                                double mom_zy) noexcept {
  const double var_z = std::max(mom_zz - mean_z * mean_z, 0.0);
  const double var_y = std::max(mom_yy - mean_y * mean_y, 0.0);
  // The floor is relative to the raw second moment: a true zero variance
  // reaches this bracket as +/- a few ulp of mom_zz depending on summation
  // order, so an absolute floor would split identical degenerate resamples
  // into NaN on one evaluation path and +/-1 on another.
  if (var_z <= kVarianceFloor * std::max(mom_zz, 0.0) ||
      var_y <= kVarianceFloor * std::max(mom_yy, 0.0)) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  const double cov = mom_zy - mean_z * mean_y;
  const double r = cov / (std::sqrt(var_z) * std::sqrt(var_y));
  return std::clamp(r, -1.0, 1.0);
}

MomentStatistic mean_statistic() {
  return MomentStatistic("mean", {[](double x) { return x; }},
                         [](std::span<const double> m) { return m[0]; });
}

MomentStatistic second_raw_moment_statistic() {
  return MomentStatistic("second_raw_moment", {[](double x) { return x * x; }},
                         [](std::span<const double> m) { return m[0]; });
}

MomentStatistic variance_statistic() {
  return MomentStatistic("variance", {[](double x) { return x; }, [](double x) { return x * x; }},
                         [](std::span<const double> m) { return m[1] - m[0] * m[0]; });
}

PairedMomentStatistic correlation_statistic() {
  std::vector<PairedMomentStatistic::Transform> transforms = {
      [](PairPoint p) { return p.z; },       [](PairPoint p) { return p.y; },
      [](PairPoint p) { return p.z * p.z; }, [](PairPoint p) { return p.y * p.y; },
      [](PairPoint p) { return p.z * p.y; },
  };
  return PairedMomentStatistic("correlation", std::move(transforms),
                               [](std::span<const double> m) {
                                 return correlation_from_moments(m[0], m[1], m[2], m[3], m[4]);
                               });
}

}  // namespace wboot
