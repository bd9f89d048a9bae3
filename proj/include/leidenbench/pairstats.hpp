#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leidenbench/indicators.hpp"

namespace leidenbench {

/// A finite value series for one indicator and period. May be empty.
struct ValueSeries {
    std::vector<double> values;
    IndicatorId indicator = IndicatorId::MNCS;
    std::string period;
};

/// Benchmark statistics over the population of all unordered pairs of a
/// series: the mean (M), sample standard deviation (SD) and maximum (MAX)
/// of the absolute differences |x_i - x_j|. sd is absent when there is only
/// a single pair (variance denominator would be zero).
struct PairwiseStats {
    std::uint64_t n_values = 0;
    std::uint64_t n_pairs = 0;
    double mean = 0.0;
    std::optional<double> sd;
    double max = 0.0;

    friend bool operator==(const PairwiseStats&, const PairwiseStats&) = default;
};

/// Number of unordered pairs x(x-1)/2, exact in integer arithmetic.
[[nodiscard]] std::uint64_t count_pairs(std::uint64_t x);

/// Brute-force reference: enumerates every unordered pair. O(n^2); meant as
/// an oracle for modest n, not for production series. Returns nullopt when
/// the series has fewer than two values.
[[nodiscard]] std::optional<PairwiseStats> pairwise_stats_naive(
    std::span<const double> values);

/// Closed-form path computing the same statistics without pair enumeration,
/// O(n log n) time and O(n) space: over the ascending sort x(1)..x(n),
///
///   sum |x_i - x_j|   = sum_k (2k - n - 1) x(k)
///   sum (x_i - x_j)^2 = n sum x^2 - (sum x)^2
///   max |x_i - x_j|   = x(n) - x(1)
///
/// Values are centered and sums compensated so the oracle equivalence holds
/// at n = 10^6.
[[nodiscard]] std::optional<PairwiseStats> pairwise_stats_fast(
    std::span<const double> values);

[[nodiscard]] std::optional<PairwiseStats> pairwise_stats_naive(const ValueSeries& s);
[[nodiscard]] std::optional<PairwiseStats> pairwise_stats_fast(const ValueSeries& s);

}  // namespace leidenbench
