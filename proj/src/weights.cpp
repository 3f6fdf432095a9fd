#include "wboot/weights.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wboot {

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("WeightVector: empty");
  double sum = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const double w = weights_[i];
    if (!(w >= 0.0 && w <= 1.0)) {
      throw std::invalid_argument("WeightVector: entry " + std::to_string(i) +
                                  " outside [0, 1]: " + std::to_string(w));
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    throw std::invalid_argument("WeightVector: entries sum to " + std::to_string(sum) +
                                ", expected 1");
  }
}

WeightVector uniform_weights(std::size_t n) {
  if (n == 0) throw std::invalid_argument("uniform_weights: n must be positive");
  return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

CountMatrix::CountMatrix(std::size_t rows, std::size_t columns, std::vector<std::uint32_t> counts)
    : rows_(rows), columns_(columns), counts_(std::move(counts)) {
  if (rows_ == 0 || columns_ == 0) throw std::invalid_argument("CountMatrix: empty dimensions");
  if (counts_.size() != rows_ * columns_) {
    throw std::invalid_argument("CountMatrix: buffer size does not match dimensions");
  }
  for (std::size_t j = 0; j < columns_; ++j) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < rows_; ++i) sum += counts_[j * rows_ + i];
    if (sum != rows_) {
      throw std::invalid_argument("CountMatrix: column " + std::to_string(j) + " sums to " +
                                  std::to_string(sum) + ", expected " + std::to_string(rows_));
    }
  }
}

WeightMatrix::WeightMatrix(std::size_t rows, std::size_t columns, std::vector<double> weights,
                           WeightSource source)
    : rows_(rows), columns_(columns), weights_(std::move(weights)), source_(source) {
  if (rows_ == 0 || columns_ == 0) throw std::invalid_argument("WeightMatrix: empty dimensions");
  if (weights_.size() != rows_ * columns_) {
    throw std::invalid_argument("WeightMatrix: buffer size does not match dimensions");
  }
  for (std::size_t j = 0; j < columns_; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      const double w = weights_[j * rows_ + i];
      if (!(w >= 0.0 && w <= 1.0)) {
        throw std::invalid_argument("WeightMatrix: entry outside [0, 1] in column " +
                                    std::to_string(j));
      }
      sum += w;
    }
    if (std::abs(sum - 1.0) > kWeightSumTolerance) {
      throw std::invalid_argument("WeightMatrix: column " + std::to_string(j) + " sums to " +
                                  std::to_string(sum) + ", expected 1");
    }
  }
}

}  // namespace wboot
