#include "leidenbench/pairstats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kahan.hpp"

namespace leidenbench {

namespace {

using detail::KahanSum;

void require_finite(std::span<const double> values) {
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("value series contains a non-finite value");
        }
    }
}

std::optional<double> sample_sd(double sum_abs, double sum_sq, std::uint64_t pairs) {
    if (pairs < 2) return std::nullopt;
    const double m = static_cast<double>(pairs);
    double variance = (sum_sq - sum_abs * sum_abs / m) / (m - 1.0);
    // Exact cancellation can land a hair below zero for near-constant data.
    if (variance < 0.0) variance = 0.0;
    return std::sqrt(variance);
}

}  // namespace

std::uint64_t count_pairs(std::uint64_t x) {
    if (x < 2) return 0;
    return (x % 2 == 0) ? (x / 2) * (x - 1) : x * ((x - 1) / 2);
}

std::optional<PairwiseStats> pairwise_stats_naive(std::span<const double> values) {
    require_finite(values);
    const std::size_t n = values.size();
    if (n < 2) return std::nullopt;

    KahanSum sum_abs;
    KahanSum sum_sq;
    double max_diff = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double d = std::abs(values[i] - values[j]);
            sum_abs.add(d);
            sum_sq.add(d * d);
            max_diff = std::max(max_diff, d);
        }
    }

    const std::uint64_t pairs = count_pairs(n);
    PairwiseStats stats;
    stats.n_values = n;
    stats.n_pairs = pairs;
    stats.mean = sum_abs.value() / static_cast<double>(pairs);
    stats.sd = sample_sd(sum_abs.value(), sum_sq.value(), pairs);
    stats.max = max_diff;
    return stats;
}

std::optional<PairwiseStats> pairwise_stats_fast(std::span<const double> values) {
    require_finite(values);
    const std::size_t n = values.size();
    if (n < 2) return std::nullopt;

    // Center on the mean before forming the closed-form sums: the squared
    // sum S2 = n*sum(x^2) - (sum x)^2 is a difference of near-equal terms
    // whose cancellation grows with the magnitude of the values, while the
    // statistics depend only on differences.
    KahanSum raw_sum;
    for (double v : values) raw_sum.add(v);
    const double center = raw_sum.value() / static_cast<double>(n);

    std::vector<double> y(values.begin(), values.end());
    for (double& v : y) v -= center;
    std::sort(y.begin(), y.end());

    KahanSum sum_y;
    KahanSum sum_y2;
    KahanSum weighted;  // sum over k of (2k - n - 1) * y(k)
    const double dn = static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double v = y[k];
        sum_y.add(v);
        sum_y2.add(v * v);
        weighted.add((2.0 * static_cast<double>(k + 1) - dn - 1.0) * v);
    }

    const double s1 = std::max(weighted.value(), 0.0);
    const double sy = sum_y.value();
    const double s2 = std::max(dn * sum_y2.value() - sy * sy, 0.0);
    const std::uint64_t pairs = count_pairs(n);

    PairwiseStats stats;
    stats.n_values = n;
    stats.n_pairs = pairs;
    stats.mean = s1 / static_cast<double>(pairs);
    stats.sd = sample_sd(s1, s2, pairs);
    stats.max = y.back() - y.front();
    return stats;
}

std::optional<PairwiseStats> pairwise_stats_naive(const ValueSeries& s) {
    return pairwise_stats_naive(std::span<const double>(s.values));
}

std::optional<PairwiseStats> pairwise_stats_fast(const ValueSeries& s) {
    return pairwise_stats_fast(std::span<const double>(s.values));
}

}  // namespace leidenbench
