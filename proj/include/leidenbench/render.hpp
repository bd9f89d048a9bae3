#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "leidenbench/analysis.hpp"
#include "leidenbench/css.hpp"

namespace leidenbench {

enum class OutputFormat {
    Markdown,
    Csv,
    Json,
};

[[nodiscard]] std::optional<OutputFormat> parse_output_format(std::string_view name);

/// How tables are rendered. Display rounding is round-half-away-from-zero
/// at `precision` decimals and never touches the underlying values; JSON
/// output always carries full precision regardless of `precision`.
struct RenderSpec {
    OutputFormat format = OutputFormat::Markdown;
    int precision = 2;
    bool include_counts = false;
};

/// Fixed-point display formatting with round-half-away-from-zero ties,
/// decided on the exact decimal expansion of the double. "-0.00" never
/// appears; a result that rounds to zero is unsigned.
[[nodiscard]] std::string format_fixed(double value, int precision);

/// One period block per table row group, newest first; rows n/pairs (when
/// counts are included), M, SD, MAX; columns in canonical indicator order.
/// Absent cells render empty (markdown/csv) or null (json).
[[nodiscard]] std::string render_benchmark_table(const BenchmarkTable& table,
                                                 const RenderSpec& spec);

/// A CSS partition listing for one (indicator, period) slice: universities
/// with their values in record order plus the partition they produced.
struct CssListing {
    std::string period;
    IndicatorId indicator = IndicatorId::MNCS;
    std::vector<std::string> universities;
    std::vector<double> values;
    CssPartition partition;
};

[[nodiscard]] std::string render_css_listings(std::span<const CssListing> listings,
                                              const RenderSpec& spec);

/// Within-class benchmark rows for one (indicator, period) slice.
struct GroupBenchmarkBlock {
    std::string period;
    IndicatorId indicator = IndicatorId::MNCS;
    GroupBenchmark benchmark;
};

[[nodiscard]] std::string render_group_benchmarks(
    std::span<const GroupBenchmarkBlock> blocks, const RenderSpec& spec);

/// One judged pair of universities in one period.
struct ComparisonRow {
    std::string period;
    std::string university_a;
    std::string university_b;
    double value_a = 0.0;
    double value_b = 0.0;
    ComparisonVerdict verdict;
};

[[nodiscard]] std::string render_comparisons(std::span<const ComparisonRow> rows,
                                             const RenderSpec& spec);

}  // namespace leidenbench
