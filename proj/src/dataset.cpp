#include "wboot/dataset.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wboot/csv.hpp"
#include "wboot/errors.hpp"

namespace wboot {

namespace {

struct Line {
  std::size_t number;  // 1-based position in the file
  std::string text;
};

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(line.substr(start));
      return cells;
    }
    cells.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

bool all_cells_numeric(std::string_view line) {
  for (const std::string_view cell : split_cells(line)) {
    if (!parse_finite_double(cell)) return false;
  }
  return true;
}

[[noreturn]] void fail(const std::filesystem::path& path, std::size_t line, const std::string& why) {
  throw ParseError(path.string() + ":" + std::to_string(line) + ": " + why);
}

}  // namespace

std::variant<Sample, PairedSample> parse_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");

  std::vector<Line> lines;
  std::string raw;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (trim(raw).empty()) continue;
    lines.push_back({number, raw});
  }
  if (lines.empty()) throw ParseError(path.string() + ": empty file");

  std::size_t first = 0;
  if (!all_cells_numeric(lines[0].text)) first = 1;  // header line
  if (first >= lines.size()) fail(path, lines[0].number, "no data rows after header");

  const std::size_t columns = split_cells(lines[first].text).size();
  if (columns > 2) {
    fail(path, lines[first].number,
         "expected 1 or 2 columns, found " + std::to_string(columns));
  }

  std::vector<double> col0;
  std::vector<double> col1;
  for (std::size_t li = first; li < lines.size(); ++li) {
    const auto cells = split_cells(lines[li].text);
    if (cells.size() != columns) {
      fail(path, lines[li].number,
           "expected " + std::to_string(columns) + " columns, found " +
               std::to_string(cells.size()));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto value = parse_finite_double(cells[c]);
      if (!value) {
        fail(path, lines[li].number,
             "cell " + std::to_string(c + 1) + " is not a finite number: '" +
                 std::string(trim(cells[c])) + "'");
      }
      (c == 0 ? col0 : col1).push_back(*value);
    }
  }

  try {
    if (columns == 1) return Sample(std::move(col0));
    return PairedSample(std::move(col0), std::move(col1));
  } catch (const std::invalid_argument& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace wboot
