#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "wboot/rng.hpp"
#include "wboot/sample.hpp"
#include "wboot/weights.hpp"

namespace wboot {

namespace detail {

/// One Multinomial(N, 1/N 1_N) draw via the conditional-binomial chain:
/// category i takes Binomial(remaining trials, 1/(remaining categories)).
/// O(N) expected time, column sums to N exactly.
void multinomial_column(SplitMix64& gen, std::size_t n, std::uint32_t* column);

/// One Dirichlet(1_N) draw: unit-rate exponentials normalized by their sum.
/// All entries strictly positive.
void dirichlet_column(SplitMix64& gen, std::size_t n, double* column);

}  // namespace detail

/// B multinomial count columns. Column j is drawn from stream
/// rng.stream(j), so a matrix based at stream 0 reproduces, column for
/// column, the draws the chunked engine makes at the same master seed.
CountMatrix sample_multinomial_counts(std::size_t n, std::size_t b, RngSpec rng,
                                      std::size_t max_bytes = kDefaultMatrixBudget);

/// Entrywise division by N. Multinomial-sourced weights are exactly the
/// rounded quotients count/N.
WeightMatrix counts_to_weights(const CountMatrix& counts);

/// B Dirichlet(1_N) weight columns; same per-column stream rule as
/// sample_multinomial_counts.
WeightMatrix sample_dirichlet_weights(std::size_t n, std::size_t b, RngSpec rng,
                                      std::size_t max_bytes = kDefaultMatrixBudget);

/// The resampled dataset with x_i repeated counts[i] times, ascending index
/// order. Bridges the count formulation back to plain data resampling.
Sample expand_counts_to_resample(const Sample& sample, std::span<const std::uint32_t> counts);
PairedSample expand_counts_to_resample(const PairedSample& sample,
                                       std::span<const std::uint32_t> counts);

}  // namespace wboot
