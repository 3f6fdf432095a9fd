#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace testutil {

/// |a - b| <= tol * max(1, |a|, |b|); two NaNs count as a match.
inline bool rel_close(double a, double b, double tol) {
  if (std::isnan(a) || std::isnan(b)) return std::isnan(a) && std::isnan(b);
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

/// Exact same bit pattern (NaN matches NaN).
inline bool bit_equal(double a, double b) {
  std::uint64_t ua = 0;
  std::uint64_t ub = 0;
  std::memcpy(&ua, &a, sizeof a);
  std::memcpy(&ub, &b, sizeof b);
  return ua == ub;
}

inline bool all_rel_close(std::span<const double> a, std::span<const double> b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!rel_close(a[i], b[i], tol)) return false;
  }
  return true;
}

inline bool all_bit_equal(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!bit_equal(a[i], b[i])) return false;
  }
  return true;
}

/// Textbook two-pass Pearson correlation: center first, then one ratio.
/// Deliberately a different formulation than the library's moment path.
inline double direct_pearson(std::span<const double> z, std::span<const double> y) {
  const std::size_t n = z.size();
  double mz = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mz += z[i];
    my += y[i];
  }
  mz /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double szz = 0.0;
  double syy = 0.0;
  double szy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dz = z[i] - mz;
    const double dy = y[i] - my;
    szz += dz * dz;
    syy += dy * dy;
    szy += dz * dy;
  }
  return szy / std::sqrt(szz * syy);
}

inline double mean_of(std::span<const double> v) {
  double sum = 0.0;
  for (const double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

/// Sample standard deviation, divisor n-1.
inline double sd_of(std::span<const double> v) {
  const double m = mean_of(v);
  double sq = 0.0;
  for (const double x : v) sq += (x - m) * (x - m);
  return std::sqrt(sq / static_cast<double>(v.size() - 1));
}

/// Test data comes from std::mt19937_64, independent of the library's
/// generator.
inline std::vector<double> random_vector(std::uint64_t seed, std::size_t n, double lo, double hi) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> out(n);
  for (double& x : out) x = dist(gen);
  return out;
}

/// One multinomial count column drawn by plain index sampling — an
/// independent algorithm from the library's conditional-binomial chain.
inline std::vector<std::uint32_t> random_count_column(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::size_t> dist(0, n - 1);
  std::vector<std::uint32_t> counts(n, 0);
  for (std::size_t i = 0; i < n; ++i) ++counts[dist(gen)];
  return counts;
}

/// R^2 of the ordinary least-squares line through (x, y).
inline double linear_fit_r2(std::span<const double> x, std::span<const double> y) {
  const double mx = mean_of(x);
  const double my = mean_of(y);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss_res = 0.0;
  double ss_tot = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double fit = intercept + slope * x[i];
    ss_res += (y[i] - fit) * (y[i] - fit);
    ss_tot += (y[i] - my) * (y[i] - my);
  }
  return 1.0 - ss_res / ss_tot;
}

inline std::filesystem::path temp_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "wboot_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::filesystem::path write_file(const std::string& name, const std::string& contents) {
  const auto path = temp_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << contents;
  return path;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

inline std::vector<std::string> split_on(const std::string& line, char sep) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) cells.push_back(cell);
  if (!line.empty() && line.back() == sep) cells.push_back("");
  return cells;
}

/// Redirects std::cout into a buffer for the lifetime of the object.
class CaptureStdout {
 public:
  CaptureStdout() : old_(std::cout.rdbuf(buffer_.rdbuf())) {}
  ~CaptureStdout() { std::cout.rdbuf(old_); }
  CaptureStdout(const CaptureStdout&) = delete;
  CaptureStdout& operator=(const CaptureStdout&) = delete;

  [[nodiscard]] std::string str() const { return buffer_.str(); }

 private:
  std::ostringstream buffer_;
  std::streambuf* old_;
};

}  // namespace testutil
