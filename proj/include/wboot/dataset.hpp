#pragma once

#include <filesystem>
#include <variant>

#include "wboot/sample.hpp"

namespace wboot {

/// Reads a one-column (univariate) or two-column (paired) CSV dataset.
/// The first line is skipped iff any of its cells fails to parse as a
/// number. Ragged rows, non-numeric body cells and empty files raise
/// ParseError naming the line.
std::variant<Sample, PairedSample> parse_dataset(const std::filesystem::path& path);

}  // namespace wboot
