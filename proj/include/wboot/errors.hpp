#pragma once

#include <stdexcept>
#include <string>

namespace wboot {

/// Mismatched input lengths (sample vs. weights, counts vs. data, ...).
class DimensionError : public std::runtime_error {
 public:
  explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested matrix would exceed the configured memory budget.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// A count column does not sum to the sample size.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

/// A statistic was undefined (e.g. zero weighted variance) under NanPolicy::fail.
class UndefinedStatisticError : public std::runtime_error {
 public:
  explicit UndefinedStatisticError(const std::string& what) : std::runtime_error(what) {}
};

/// A replication vector holds no finite entries to summarize.
class EmptyDistributionError : public std::runtime_error {
 public:
  explicit EmptyDistributionError(const std::string& what) : std::runtime_error(what) {}
};

/// A dataset file could not be parsed; the message names the offending line.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wboot
