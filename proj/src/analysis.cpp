#include "leidenbench/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "leidenbench/ingest.hpp"

namespace leidenbench {

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::WithinExpected: return "WithinExpected";
        case Verdict::AboveExpected: return "AboveExpected";
        case Verdict::Remarkable: return "Remarkable";
    }
    return "WithinExpected";
}

BenchmarkTable build_benchmark_table(std::span<const IndicatorRecord> records,
                                     std::vector<std::string> periods,
                                     std::vector<IndicatorId> indicators,
                                     std::string field, bool frac_counting) {
    if (periods.empty()) {
        throw std::invalid_argument("build_benchmark_table: no periods requested");
    }
    if (indicators.empty()) {
        throw std::invalid_argument("build_benchmark_table: no indicators requested");
    }

    std::sort(periods.begin(), periods.end(), std::greater<>());
    periods.erase(std::unique(periods.begin(), periods.end()), periods.end());
    std::sort(indicators.begin(), indicators.end());
    indicators.erase(std::unique(indicators.begin(), indicators.end()),
                     indicators.end());

    BenchmarkTable table;
    table.field = std::move(field);
    table.frac_counting = frac_counting;
    table.periods = std::move(periods);
    table.indicators = std::move(indicators);
    table.cells.resize(table.indicators.size() * table.periods.size());

    for (std::size_t p = 0; p < table.periods.size(); ++p) {
        DatasetFilter filter{table.field, table.periods[p], table.frac_counting};
        auto slice = filter_records(records, filter);
        for (std::size_t i = 0; i < table.indicators.size(); ++i) {
            auto series = extract_indicator(slice, table.indicators[i]);
            table.cells[i * table.periods.size() + p] = pairwise_stats_fast(series);
        }
    }
    return table;
}

GroupBenchmark css_group_stats(std::span<const double> values, int requested_classes) {
    CssPartition part = css_partition(values, requested_classes);

    GroupBenchmark bench;
    bench.requested_classes = part.requested_classes;
    bench.generated_classes = part.generated_classes;
    bench.thresholds = part.thresholds;

    for (int cls = 1; cls <= part.generated_classes; ++cls) {
        std::vector<double> members;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (part.assignments[i] == cls) members.push_back(values[i]);
        }
        GroupBenchmark::Row row;
        row.class_index = cls;
        row.label = css_class_label(cls, part.requested_classes);
        row.n_values = members.size();
        row.n_pairs = count_pairs(members.size());
        row.stats = pairwise_stats_fast(members);
        bench.rows.push_back(std::move(row));
    }
    return bench;
}

ComparisonVerdict compare_universities(double a, double b, IndicatorId indicator,
                                       const std::optional<PairwiseStats>& benchmark,
                                       double remarkable_fraction) {
    if (!benchmark || benchmark->n_pairs < 1) {
        throw std::invalid_argument(
            "compare_universities: benchmark unavailable; build the pairwise "
            "benchmark over at least two universities first");
    }
    if (!(remarkable_fraction > 0.0 && remarkable_fraction <= 1.0)) {
        throw std::invalid_argument(
            "compare_universities: remarkable_fraction must lie in (0, 1]");
    }
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("compare_universities: non-finite value");
    }

    ComparisonVerdict result;
    result.indicator = indicator;
    result.diff = std::abs(a - b);
    result.benchmark_mean = benchmark->mean;
    result.benchmark_max = benchmark->max;
    result.remarkable_fraction = remarkable_fraction;
    if (result.diff >= remarkable_fraction * benchmark->max) {
        result.verdict = Verdict::Remarkable;
    } else if (result.diff > benchmark->mean) {
        result.verdict = Verdict::AboveExpected;
    } else {
        result.verdict = Verdict::WithinExpected;
    }
    return result;
}

}  // namespace leidenbench
