#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace wboot {

/// Shortest decimal form that round-trips to the same double ('.' separator,
/// no locale). NaN prints as "nan".
std::string format_double(double value);

/// Strict, locale-free double parse of a whole (trimmed) cell; rejects
/// non-finite values. Empty optional on failure.
std::optional<double> parse_finite_double(std::string_view cell);

std::string_view trim(std::string_view text);

}  // namespace wboot
