#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wboot {

/// Absolute tolerance on weight-column sums.
inline constexpr double kWeightSumTolerance = 1e-12;

/// Default per-matrix memory budget in bytes (samplers and engine chunks).
inline constexpr std::size_t kDefaultMatrixBudget = std::size_t{2} << 30;

/// One bootstrap weight column w*: nonnegative entries in [0, 1] summing to 1
/// within kWeightSumTolerance.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> weights);

  [[nodiscard]] std::size_t size() const noexcept { return weights_.size(); }
  [[nodiscard]] std::span<const double> values() const noexcept { return weights_; }
  double operator[](std::size_t i) const noexcept { return weights_[i]; }

 private:
  std::vector<double> weights_;
};

/// Uniform weights (1/N, ..., 1/N).
WeightVector uniform_weights(std::size_t n);

/// N x B multinomial count matrix n*, column-major; every column sums
/// exactly to N (integer arithmetic).
class CountMatrix {
 public:
  CountMatrix(std::size_t rows, std::size_t columns, std::vector<std::uint32_t> counts);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t columns() const noexcept { return columns_; }
  [[nodiscard]] std::span<const std::uint32_t> column(std::size_t j) const noexcept {
    return {counts_.data() + j * rows_, rows_};
  }
  [[nodiscard]] std::uint32_t at(std::size_t i, std::size_t j) const noexcept {
    return counts_[j * rows_ + i];
  }

 private:
  std::size_t rows_;
  std::size_t columns_;
  std::vector<std::uint32_t> counts_;  // column-major
};

enum class WeightSource { multinomial, dirichlet };

/// N x B bootstrap weight matrix W*, column-major; entries in [0, 1], every
/// column sums to 1 within kWeightSumTolerance.
class WeightMatrix {
 public:
  WeightMatrix(std::size_t rows, std::size_t columns, std::vector<double> weights,
               WeightSource source);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t columns() const noexcept { return columns_; }
  [[nodiscard]] WeightSource source() const noexcept { return source_; }
  [[nodiscard]] std::span<const double> column(std::size_t j) const noexcept {
    return {weights_.data() + j * rows_, rows_};
  }
  [[nodiscard]] double at(std::size_t i, std::size_t j) const noexcept {
    return weights_[j * rows_ + i];
  }

 private:
  std::size_t rows_;
  std::size_t columns_;
  std::vector<double> weights_;  // column-major
  WeightSource source_;
};

}  // namespace wboot
