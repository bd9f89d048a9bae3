#include "leidenbench/ingest.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <iterator>
#include <map>
#include <sstream>

#include "csv_common.hpp"

namespace leidenbench {

namespace {

using detail::trim;

// Splits delimited text into records of fields, honoring RFC 4180 quoting
// (embedded delimiters, quotes and newlines inside quoted fields). Blank
// lines are dropped. Row numbers reported in errors are 1-based record
// positions; the header is record 1.
std::vector<std::vector<std::string>> split_rows(std::string_view text, char delimiter) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool field_was_quoted = false;

    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
        field_was_quoted = false;
    };
    auto end_row = [&] {
        end_field();
        bool blank = row.size() == 1 && row[0].empty();
        if (!blank) rows.push_back(std::move(row));
        row.clear();
    };

    // Skip a UTF-8 byte order mark so the first header cell matches exactly.
    if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < n && text[i + 1] == '"') {
                    field.push_back('"');
                    i += 2;
                } else {
                    in_quotes = false;
                    ++i;
                }
            } else {
                field.push_back(c);
                ++i;
            }
            continue;
        }
        if (c == '"' && field.empty() && !field_was_quoted) {
            in_quotes = true;
            field_was_quoted = true;
            ++i;
        } else if (c == delimiter) {
            end_field();
            ++i;
        } else if (c == '\r' || c == '\n') {
            end_row();
            if (c == '\r' && i + 1 < n && text[i + 1] == '\n') ++i;
            ++i;
        } else if (field_was_quoted) {
            // Only a delimiter or newline may follow a closing quote.
            throw ParseError("malformed quoted field near row " +
                                 std::to_string(rows.size() + 1),
                             rows.size() + 1);
        } else {
            field.push_back(c);
            ++i;
        }
    }
    if (in_quotes) {
        throw ParseError("unterminated quoted field at end of input");
    }
    if (!field.empty() || !row.empty() || field_was_quoted) end_row();
    return rows;
}

// Full-cell numeric parse, decimal point only. Leading '+' and surrounding
// whitespace are tolerated; anything else non-numeric yields nullopt, as do
// "nan"/"inf" style cells (never a non-finite value).
std::optional<double> parse_numeric_cell(std::string_view cell) {
    std::string_view s = trim(cell);
    if (s.empty()) return std::nullopt;
    if (s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return std::nullopt;
    double value = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    if (!std::isfinite(value)) return std::nullopt;
    return value;
}

constexpr std::array<std::string_view, 4> kMetaColumns = {
    "University", "Field", "Period", "Frac_counting"};

}  // namespace

std::vector<IndicatorRecord> parse_results(std::string_view text, char delimiter) {
    auto rows = split_rows(text, delimiter);
    if (rows.empty()) {
        throw ParseError("empty input: expected a header row");
    }

    // Resolve the required column positions from the header.
    std::map<std::string, std::size_t, std::less<>> header;
    std::vector<std::string> missing;
    std::vector<std::string> duplicated;
    const auto& header_row = rows.front();
    for (std::size_t i = 0; i < header_row.size(); ++i) {
        std::string name(trim(header_row[i]));
        if (name.empty()) continue;
        auto [it, inserted] = header.emplace(std::move(name), i);
        if (!inserted) duplicated.push_back(it->first);
    }
    auto require = [&](std::string_view name) -> std::size_t {
        auto it = header.find(name);
        if (it == header.end()) {
            missing.emplace_back(name);
            return 0;
        }
        if (std::find(duplicated.begin(), duplicated.end(), it->first) !=
            duplicated.end()) {
            throw ParseError("duplicated column: " + it->first);
        }
        return it->second;
    };

    std::array<std::size_t, kMetaColumns.size()> meta_idx{};
    for (std::size_t i = 0; i < kMetaColumns.size(); ++i) {
        meta_idx[i] = require(kMetaColumns[i]);
    }
    std::array<std::size_t, kIndicatorCount> ind_idx{};
    for (IndicatorId id : kAllIndicators) {
        ind_idx[indicator_index(id)] = require(column_name(id));
    }
    if (!missing.empty()) {
        std::string msg = "missing required column";
        if (missing.size() > 1) msg += 's';
        msg += ": ";
        for (std::size_t i = 0; i < missing.size(); ++i) {
            if (i > 0) msg += ", ";
            msg += missing[i];
        }
        throw ParseError(msg);
    }

    std::size_t min_width = 0;
    for (std::size_t idx : meta_idx) min_width = std::max(min_width, idx + 1);
    for (std::size_t idx : ind_idx) min_width = std::max(min_width, idx + 1);

    std::vector<IndicatorRecord> records;
    records.reserve(rows.size() - 1);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& cells = rows[r];
        const std::size_t row_no = r + 1;
        if (cells.size() < min_width) {
            throw ParseError("row " + std::to_string(row_no) + ": expected at least " +
                                 std::to_string(min_width) + " columns, got " +
                                 std::to_string(cells.size()),
                             row_no);
        }
        IndicatorRecord rec;
        rec.university = cells[meta_idx[0]];
        rec.field = cells[meta_idx[1]];
        rec.period = cells[meta_idx[2]];
        if (rec.university.empty()) {
            throw ParseError("row " + std::to_string(row_no) + ": empty University cell",
                             row_no);
        }

        std::string_view frac = trim(cells[meta_idx[3]]);
        if (frac == "0") {
            rec.frac_counting = false;
        } else if (frac == "1") {
            rec.frac_counting = true;
        } else {
            throw ParseError("row " + std::to_string(row_no) +
                                 ": Frac_counting must be 0 or 1, got \"" +
                                 std::string(cells[meta_idx[3]]) + "\"",
                             row_no);
        }

        for (IndicatorId id : kAllIndicators) {
            auto parsed = parse_numeric_cell(cells[ind_idx[indicator_index(id)]]);
            if (parsed) {
                double v = *parsed;
                bool in_range = (id == IndicatorId::MNCS) ? v >= 0.0
                                                          : (v >= 0.0 && v <= 1.0);
                if (!in_range) {
                    throw ParseError("row " + std::to_string(row_no) + ": " +
                                         std::string(column_name(id)) +
                                         " value out of range: " + std::to_string(v),
                                     row_no);
                }
            }
            rec.value(id) = parsed;
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<IndicatorRecord> parse_results(std::istream& input, char delimiter) {
    std::string text(std::istreambuf_iterator<char>(input),
                     std::istreambuf_iterator<char>{});
    return parse_results(std::string_view(text), delimiter);
}

std::vector<IndicatorRecord> filter_records(std::span<const IndicatorRecord> records,
                                            const DatasetFilter& filter) {
    std::vector<IndicatorRecord> out;
    for (const auto& rec : records) {
        if (rec.field == filter.field && rec.period == filter.period &&
            rec.frac_counting == filter.frac_counting) {
            out.push_back(rec);
        }
    }
    return out;
}

std::vector<double> extract_indicator(std::span<const IndicatorRecord> records,
                                      IndicatorId indicator) {
    std::vector<double> out;
    out.reserve(records.size());
    for (const auto& rec : records) {
        if (const auto& v = rec.value(indicator)) out.push_back(*v);
    }
    return out;
}

namespace {

std::string shortest_double(double v) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

}  // namespace

std::string serialize_records(std::span<const IndicatorRecord> records, char delimiter) {
    using detail::csv_field;
    std::string out;
    const char d = delimiter;

    for (std::size_t i = 0; i < kMetaColumns.size(); ++i) {
        if (i > 0) out.push_back(d);
        out += kMetaColumns[i];
    }
    for (IndicatorId id : kAllIndicators) {
        out.push_back(d);
        out += column_name(id);
    }
    out.push_back('\n');

    for (const auto& rec : records) {
        out += csv_field(rec.university, d);
        out.push_back(d);
        out += csv_field(rec.field, d);
        out.push_back(d);
        out += csv_field(rec.period, d);
        out.push_back(d);
        out += rec.frac_counting ? '1' : '0';
        for (IndicatorId id : kAllIndicators) {
            out.push_back(d);
            if (const auto& v = rec.value(id)) out += shortest_double(*v);
        }
        out.push_back('\n');
    }
    return out;
}

std::vector<std::string> collect_periods(std::span<const IndicatorRecord> records) {
    std::vector<std::string> periods;
    for (const auto& rec : records) periods.push_back(rec.period);
    std::sort(periods.begin(), periods.end(), std::greater<>());
    periods.erase(std::unique(periods.begin(), periods.end()), periods.end());
    return periods;
}

}  // namespace leidenbench
