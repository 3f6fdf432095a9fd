#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wboot {

/// Observed univariate data x = (x_1, ..., x_N). Immutable once built;
/// construction rejects empty data and non-finite entries.
class Sample {
 public:
  explicit Sample(std::vector<double> values);

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

 private:
  std::vector<double> values_;
};

/// One observation of a paired sample.
struct PairPoint {
  double z = 0.0;
  double y = 0.0;
};

/// Observed paired data (z, y) of common length N >= 2, entries finite.
class PairedSample {
 public:
  PairedSample(std::vector<double> z, std::vector<double> y);

  [[nodiscard]] std::size_t size() const noexcept { return z_.size(); }
  [[nodiscard]] std::span<const double> z() const noexcept { return z_; }
  [[nodiscard]] std::span<const double> y() const noexcept { return y_; }
  PairPoint operator[](std::size_t i) const noexcept { return {z_[i], y_[i]}; }

 private:
  std::vector<double> z_;
  std::vector<double> y_;
};

}  // namespace wboot
