#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <variant>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "wboot/core.hpp"
#include "wboot/csv.hpp"
#include "wboot/dataset.hpp"
#include "wboot/errors.hpp"
#include "wboot/sampling.hpp"

using namespace wboot;
using namespace testutil;

TEST_CASE("Sample rejects empty and non-finite data") {
  CHECK_THROWS_AS(Sample(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(Sample({1.0, std::nan(""), 3.0}), std::invalid_argument);
  CHECK_THROWS_AS(Sample({1.0, std::numeric_limits<double>::infinity()}), std::invalid_argument);
  const Sample s({1.5});
  CHECK(s.size() == 1);
  CHECK(s[0] == 1.5);
}

TEST_CASE("PairedSample enforces equal length, N >= 2, finite entries") {
  CHECK_THROWS_AS(PairedSample({1.0, 2.0}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(PairedSample({1.0}, {2.0}), std::invalid_argument);
  CHECK_THROWS_AS(PairedSample({1.0, std::nan("")}, {2.0, 3.0}), std::invalid_argument);
  const PairedSample p({1.0, 2.0}, {3.0, 4.0});
  CHECK(p.size() == 2);
  CHECK(p[1].z == 2.0);
  CHECK(p[1].y == 4.0);
}

TEST_CASE("WeightVector enforces the simplex invariants") {
  CHECK_THROWS_AS(WeightVector({0.5, 0.6}), std::invalid_argument);       // sum 1.1
  CHECK_THROWS_AS(WeightVector({-0.1, 1.1}), std::invalid_argument);      // range
  CHECK_THROWS_AS(WeightVector({0.5, 0.5 - 1e-9}), std::invalid_argument);  // sum off by 1e-9
  CHECK_NOTHROW(WeightVector({0.25, 0.75}));
  CHECK_NOTHROW(WeightVector({1.0, 0.0}));
  const WeightVector u = uniform_weights(4);
  CHECK(u.size() == 4);
  CHECK(u[0] == 0.25);
}

TEST_CASE("MomentStatistic requires transforms and a combiner") {
  CHECK_THROWS_AS(MomentStatistic("empty", {}, [](std::span<const double>) { return 0.0; }),
                  std::invalid_argument);
  CHECK_THROWS_AS(MomentStatistic("nullg", {[](double x) { return x; }}, nullptr),
                  std::invalid_argument);
  const MomentStatistic m = mean_statistic();
  CHECK(m.moment_count() == 1);
  CHECK(m.transform(0, 3.0) == 3.0);
}

TEST_CASE("weighted_transform_sum worked examples") {
  const auto identity = [](double x) { return x; };
  CHECK(weighted_transform_sum(Sample({1, 2, 3}), uniform_weights(3), identity) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(weighted_transform_sum(Sample({5, 7}), WeightVector({1.0, 0.0}), identity) == 5.0);
  CHECK(weighted_transform_sum(Sample({1, 2, 3}), WeightVector({0.0, 1.0 / 3, 2.0 / 3}),
                               identity) == doctest::Approx(8.0 / 3).epsilon(1e-12));
  CHECK_THROWS_AS(weighted_transform_sum(Sample({1, 2, 3}), uniform_weights(2), identity),
                  DimensionError);
}

TEST_CASE("evaluate_statistic worked examples") {
  CHECK(evaluate_statistic(mean_statistic(), Sample({4, 6}), uniform_weights(2)) == 5.0);

  // Variance of constant data is zero for any valid weights. Exact when the
  // weights sum to exactly 1; within cancellation noise otherwise.
  const Sample constant({2.0, 2.0, 2.0});
  CHECK(evaluate_statistic(variance_statistic(), constant, WeightVector({0.25, 0.5, 0.25})) == 0.0);
  CHECK(std::abs(evaluate_statistic(variance_statistic(), constant,
                                    WeightVector({0.2, 0.5, 0.3}))) <= 1e-12);

  // Correlation with uniform weights against the two-pass Pearson oracle.
  const PairedSample pair({1.0, 2.5, 3.0, 4.5, 5.0}, {2.0, 1.0, 4.0, 3.5, 6.0});
  const double viaStatistic =
      evaluate_statistic(correlation_statistic(), pair, uniform_weights(5));
  const double oracle = direct_pearson(pair.z(), pair.y());
  CHECK(rel_close(viaStatistic, oracle, 1e-12));
}

TEST_CASE("weighted_correlation worked examples") {
  // These inputs give weighted variances of exactly 1, so the expected
  // boundary values are exact, not merely within tolerance.
  const PairedSample same({0, 0, 2, 2}, {0, 0, 2, 2});
  CHECK(weighted_correlation(same, uniform_weights(4)) == 1.0);

  const PairedSample flipped({0, 0, 2, 2}, {0, 0, -2, -2});
  CHECK(weighted_correlation(flipped, uniform_weights(4)) == -1.0);

  const PairedSample generic({1, 2, 3, 4}, {1, 2, 3, 4});
  CHECK(weighted_correlation(generic, uniform_weights(4)) == doctest::Approx(1.0).epsilon(1e-12));

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const std::size_t n = 2 + seed % 9;
    const auto z = random_vector(seed, n, -5.0, 5.0);
    const auto y = random_vector(seed + 1000, n, -5.0, 5.0);
    const PairedSample pair(z, y);
    CHECK(rel_close(weighted_correlation(pair, uniform_weights(n)), direct_pearson(z, y), 1e-12));
  }
}

TEST_CASE("plug_in_estimate worked examples") {
  CHECK(plug_in_estimate(mean_statistic(), Sample({1, 2, 3})) ==
        doctest::Approx(2.0).epsilon(1e-15));
  CHECK(plug_in_estimate(second_raw_moment_statistic(), Sample({1, 2, 3})) ==
        doctest::Approx(14.0 / 3).epsilon(1e-15));
}

TEST_CASE("plug-in correlation on a file-ingested N=82 paired dataset matches the oracle") {
  // Correlated synthetic stand-in for an 82-row two-column dataset; the
  // point is the file-ingestion path, not the values.
  std::mt19937_64 gen(82);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::string csv = "z,y\n";
  for (int i = 0; i < 82; ++i) {
    const double z = 3.0 + normal(gen);
    const double y = 0.5 * z + 0.2 * normal(gen);
    csv += format_double(z) + "," + format_double(y) + "\n";
  }
  const auto path = write_file("law82_shaped.csv", csv);
  const auto parsed = parse_dataset(path);
  REQUIRE(std::holds_alternative<PairedSample>(parsed));
  const PairedSample& pair = std::get<PairedSample>(parsed);
  REQUIRE(pair.size() == 82);
  const double plug_in = plug_in_estimate(correlation_statistic(), pair);
  CHECK(rel_close(plug_in, direct_pearson(pair.z(), pair.y()), 1e-12));
}

TEST_CASE("uniform weights reduce every statistic to the plug-in estimate") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const std::size_t n = 2 + seed % 14;
    const Sample sample(random_vector(seed * 3 + 1, n, -10.0, 10.0));
    for (const auto& stat :
         {mean_statistic(), second_raw_moment_statistic(), variance_statistic()}) {
      const double via_uniform = evaluate_statistic(stat, sample, uniform_weights(n));
      CHECK(rel_close(via_uniform, plug_in_estimate(stat, sample), 1e-12));
    }
    const PairedSample pair(random_vector(seed * 3 + 2, n, -10.0, 10.0),
                            random_vector(seed * 3 + 3, n, -10.0, 10.0));
    CHECK(rel_close(evaluate_statistic(correlation_statistic(), pair, uniform_weights(n)),
                    plug_in_estimate(correlation_statistic(), pair), 1e-12));
  }
}

TEST_CASE("permuting sample and weights together leaves statistics unchanged") {
  std::mt19937_64 perm_gen(99);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t n = 3 + seed;
    auto z = random_vector(seed + 11, n, -4.0, 4.0);
    auto y = random_vector(seed + 211, n, -4.0, 4.0);
    auto raw_w = random_vector(seed + 311, n, 0.05, 1.0);
    const double total = std::accumulate(raw_w.begin(), raw_w.end(), 0.0);
    for (double& w : raw_w) w /= total;

    const double var_before =
        evaluate_statistic(variance_statistic(), Sample(z), WeightVector(raw_w));
    const double cor_before =
        evaluate_statistic(correlation_statistic(), PairedSample(z, y), WeightVector(raw_w));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), perm_gen);
    std::vector<double> pz(n), py(n), pw(n);
    for (std::size_t i = 0; i < n; ++i) {
      pz[i] = z[order[i]];
      py[i] = y[order[i]];
      pw[i] = raw_w[order[i]];
    }
    CHECK(rel_close(evaluate_statistic(variance_statistic(), Sample(pz), WeightVector(pw)),
                    var_before, 1e-12));
    CHECK(rel_close(evaluate_statistic(correlation_statistic(), PairedSample(pz, py),
                                       WeightVector(pw)),
                    cor_before, 1e-12));
  }
}

TEST_CASE("weighted correlation stays inside [-1, 1] exactly") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 2 + seed % 6;
    auto raw_w = random_vector(seed + 7, n, 0.01, 1.0);
    const double total = std::accumulate(raw_w.begin(), raw_w.end(), 0.0);
    for (double& w : raw_w) w /= total;
    const PairedSample pair(random_vector(seed + 17, n, -2.0, 2.0),
                            random_vector(seed + 27, n, -2.0, 2.0));
    const double r = weighted_correlation(pair, WeightVector(raw_w));
    if (!std::isnan(r)) {
      CHECK(r >= -1.0);
      CHECK(r <= 1.0);
    }
  }
  // Perfectly collinear data lands exactly on the boundary post-clamp
  // (weighted variances 1 and 4, both with exact square roots).
  const PairedSample collinear({0, 2, 2}, {0, 4, 4});
  CHECK(weighted_correlation(collinear, WeightVector({0.5, 0.25, 0.25})) == 1.0);
}

TEST_CASE("correlation is invariant to positive affine rescaling") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t n = 4 + seed % 5;
    const auto z = random_vector(seed + 41, n, -3.0, 3.0);
    const auto y = random_vector(seed + 42, n, -3.0, 3.0);
    auto raw_w = random_vector(seed + 43, n, 0.1, 1.0);
    const double total = std::accumulate(raw_w.begin(), raw_w.end(), 0.0);
    for (double& w : raw_w) w /= total;

    std::vector<double> z2(n), y2(n);
    for (std::size_t i = 0; i < n; ++i) {
      z2[i] = 3.5 * z[i] - 2.0;
      y2[i] = 0.25 * y[i] + 10.0;
    }
    const double base = weighted_correlation(PairedSample(z, y), WeightVector(raw_w));
    const double scaled = weighted_correlation(PairedSample(z2, y2), WeightVector(raw_w));
    CHECK(rel_close(scaled, base, 1e-9));
  }
}

TEST_CASE("count/resample identity holds per transform") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const std::size_t n = 2 + seed % 12;
    const Sample sample(random_vector(seed + 900, n, -6.0, 6.0));
    const auto counts = random_count_column(seed, n);
    const Sample expanded = expand_counts_to_resample(sample, counts);

    for (const auto& f : {std::function<double(double)>([](double x) { return x; }),
                          std::function<double(double)>([](double x) { return x * x; })}) {
      double via_counts = 0.0;
      for (std::size_t i = 0; i < n; ++i) via_counts += static_cast<double>(counts[i]) * f(sample[i]);
      double via_resample = 0.0;
      for (std::size_t i = 0; i < n; ++i) via_resample += f(expanded[i]);
      CHECK(rel_close(via_counts, via_resample, 1e-10));
    }
  }
}

TEST_CASE("degenerate weighted variance yields the NaN signal") {
  // All mass on a single observation.
  const PairedSample pair({1.0, 2.0, 3.0}, {5.0, 4.0, 2.0});
  CHECK(std::isnan(weighted_correlation(pair, WeightVector({0.0, 1.0, 0.0}))));

  // Constant data under uniform weights.
  const PairedSample flat({2.0, 2.0}, {1.0, 3.0});
  CHECK(std::isnan(weighted_correlation(flat, uniform_weights(2))));

  // Cancellation driving a variance bracket negative is clamped, then
  // reported undefined.
  CHECK(std::isnan(correlation_from_moments(1e9, 0.0, 1e18 * (1.0 - 1e-18), 1.0, 0.0)));

  // Overshooting covariance is clamped into the valid range.
  CHECK(correlation_from_moments(0.0, 0.0, 1.0, 1.0, 1.0 + 1e-12) == 1.0);
  CHECK(correlation_from_moments(0.0, 0.0, 1.0, 1.0, -(1.0 + 1e-12)) == -1.0);
}
