#include "wboot/sample.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wboot {

namespace {

void require_finite(const std::vector<double>& values, const char* label) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw std::invalid_argument(std::string(label) + ": non-finite entry at index " +
                                  std::to_string(i));
    }
  }
}

}  // namespace

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("Sample: need at least one observation");
  require_finite(values_, "Sample");
}

PairedSample::PairedSample(std::vector<double> z, std::vector<double> y)
    : z_(std::move(z)), y_(std::move(y)) {
  if (z_.size() != y_.size()) {
    throw std::invalid_argument("PairedSample: z and y lengths differ (" +
                                std::to_string(z_.size()) + " vs " + std::to_string(y_.size()) +
                                ")");
  }
  if (z_.size() < 2) throw std::invalid_argument("PairedSample: need at least two observations");
  require_finite(z_, "PairedSample.z");
  require_finite(y_, "PairedSample.y");
}

}  // namespace wboot
