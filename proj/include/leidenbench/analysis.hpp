#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "leidenbench/css.hpp"
#include "leidenbench/pairstats.hpp"
#include "leidenbench/records.hpp"

namespace leidenbench {

/// Grid of pairwise-difference statistics keyed by (indicator, period) over
/// one field x counting-mode slice. Cells are stored indicator-major;
/// periods run newest first. A cell is absent exactly when its extracted
/// series had fewer than two values.
struct BenchmarkTable {
    std::string field;
    bool frac_counting = false;
    std::vector<std::string> periods;
    std::vector<IndicatorId> indicators;
    std::vector<std::optional<PairwiseStats>> cells;

    [[nodiscard]] const std::optional<PairwiseStats>& cell(std::size_t indicator_idx,
                                                           std::size_t period_idx) const {
        return cells[indicator_idx * periods.size() + period_idx];
    }
};

/// Within-class pairwise benchmarks for one CSS run. One row per generated
/// class; rows of size < 2 carry no stats.
struct GroupBenchmark {
    int requested_classes = 0;
    int generated_classes = 0;
    std::vector<double> thresholds;

    struct Row {
        int class_index = 0;
        std::string label;
        std::uint64_t n_values = 0;
        std::uint64_t n_pairs = 0;
        std::optional<PairwiseStats> stats;
    };
    std::vector<Row> rows;
};

enum class Verdict {
    WithinExpected,
    AboveExpected,
    Remarkable,
};

[[nodiscard]] std::string_view verdict_name(Verdict v);

/// The meaningfulness judgment for one pair of values on one indicator:
/// a difference at or above remarkable_fraction * MAX is Remarkable, one
/// strictly above the benchmark mean is AboveExpected, anything else is
/// within what two arbitrary universities can be expected to differ by.
struct ComparisonVerdict {
    IndicatorId indicator = IndicatorId::MNCS;
    double diff = 0.0;
    double benchmark_mean = 0.0;
    double benchmark_max = 0.0;
    double remarkable_fraction = 0.9;
    Verdict verdict = Verdict::WithinExpected;
};

/// Build the full benchmark grid: for each indicator and period, filter the
/// records to (field, period, frac_counting), extract the indicator series
/// and compute its pairwise statistics. Periods are deduplicated and ordered
/// newest first, indicators in canonical column order.
///
/// Throws std::invalid_argument when periods or indicators are empty.
[[nodiscard]] BenchmarkTable build_benchmark_table(
    std::span<const IndicatorRecord> records, std::vector<std::string> periods,
    std::vector<IndicatorId> indicators, std::string field, bool frac_counting);

/// CSS-partition a series and compute pairwise statistics per class over
/// that class's members only. Errors as css_partition.
[[nodiscard]] GroupBenchmark css_group_stats(std::span<const double> values,
                                             int requested_classes);

/// Judge the difference |a - b| against a benchmark. The benchmark must be
/// present (built over at least two universities); remarkable_fraction must
/// lie in (0, 1]. The verdict is symmetric in a and b, and a difference
/// beyond the benchmark population's maximum is Remarkable.
[[nodiscard]] ComparisonVerdict compare_universities(
    double a, double b, IndicatorId indicator,
    const std::optional<PairwiseStats>& benchmark, double remarkable_fraction = 0.9);

}  // namespace leidenbench
