#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "leidenbench/records.hpp"

namespace leidenbench {

/// Raised for malformed input: missing required columns, empty input,
/// or an unusable cell. When the problem is tied to one record, row()
/// holds its 1-based position in the file (the header is row 1).
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& message,
                        std::optional<std::size_t> row = std::nullopt)
        : std::runtime_error(message), row_(row) {}

    [[nodiscard]] std::optional<std::size_t> row() const { return row_; }

  private:
    std::optional<std::size_t> row_;
};

/// Parse a delimited export of the "Results" worksheet.
///
/// The first row must be a header containing at least the columns
/// University, Field, Period, Frac_counting and the six indicator columns;
/// extra columns are ignored and order is free. Header names are matched
/// exactly after trimming surrounding whitespace. Fields may be quoted per
/// RFC 4180. Empty or non-numeric indicator cells become absent values.
[[nodiscard]] std::vector<IndicatorRecord> parse_results(std::istream& input,
                                                         char delimiter = ',');
[[nodiscard]] std::vector<IndicatorRecord> parse_results(std::string_view text,
                                                         char delimiter = ',');

/// Keep exactly the records whose field, period and counting mode equal the
/// filter's, preserving input order. An empty result is legal.
[[nodiscard]] std::vector<IndicatorRecord> filter_records(
    std::span<const IndicatorRecord> records, const DatasetFilter& filter);

/// Present values of one indicator in record order; absent values are
/// dropped. Callers are expected to have filtered to a single slice first.
[[nodiscard]] std::vector<double> extract_indicator(
    std::span<const IndicatorRecord> records, IndicatorId indicator);

/// Write records back to delimited text with the canonical column set.
/// Numbers are emitted with shortest round-trip precision, so
/// parse(serialize(r)) == r.
[[nodiscard]] std::string serialize_records(std::span<const IndicatorRecord> records,
                                            char delimiter = ',');

/// Distinct period labels, newest first (descending label order).
[[nodiscard]] std::vector<std::string> collect_periods(
    std::span<const IndicatorRecord> records);

}  // namespace leidenbench
