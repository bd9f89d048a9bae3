#include "leidenbench/render.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <stdexcept>

#include "csv_common.hpp"

namespace leidenbench {

namespace {

using detail::csv_field;
using json = nlohmann::ordered_json;

// Full fractional expansion of any finite double fits in 1074 digits; at
// that precision printf performs no rounding, so the tie decision below is
// made on exact digits.
constexpr int kExactDigits = 1074;

std::string exact_decimal(double magnitude) {
    std::string buf(1400, '\0');
    int written = std::snprintf(buf.data(), buf.size(), "%.*f", kExactDigits, magnitude);
    buf.resize(static_cast<std::size_t>(written));
    return buf;
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
    if (name == "markdown") return OutputFormat::Markdown;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    return std::nullopt;
}

std::string format_fixed(double value, int precision) {
    if (precision < 0) {
        throw std::invalid_argument("format_fixed: negative precision");
    }
    if (!std::isfinite(value)) {
        return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
    }

    const bool negative = std::signbit(value);
    std::string exact = exact_decimal(std::abs(value));
    const std::size_t dot = exact.find('.');
    std::string digits = exact.substr(0, dot) + exact.substr(dot + 1, precision);

    const bool round_up = exact[dot + 1 + precision] >= '5';
    if (round_up) {
        int i = static_cast<int>(digits.size()) - 1;
        for (; i >= 0; --i) {
            if (digits[i] != '9') {
                ++digits[i];
                break;
            }
            digits[i] = '0';
        }
        if (i < 0) digits.insert(digits.begin(), '1');
    }

    std::string integral = digits.substr(0, digits.size() - precision);
    if (integral.empty()) integral = "0";
    std::string out = integral;
    if (precision > 0) {
        out += '.';
        out += digits.substr(digits.size() - precision);
    }
    if (negative && out.find_first_of("123456789") != std::string::npos) {
        out.insert(out.begin(), '-');
    }
    return out;
}

namespace {

std::string md_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '|') out += "\\|";
        else if (c == '\n' || c == '\r') out += ' ';
        else out += c;
    }
    return out;
}

std::string md_row(const std::vector<std::string>& cells) {
    std::string out = "|";
    for (const auto& c : cells) {
        out += ' ';
        out += c;
        out += " |";
    }
    out += '\n';
    return out;
}

std::string md_separator(std::size_t columns) {
    std::string out = "|";
    for (std::size_t i = 0; i < columns; ++i) out += " --- |";
    out += '\n';
    return out;
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out += ',';
        out += csv_field(cells[i], ',');
    }
    out += '\n';
    return out;
}

std::string counting_label(bool frac) { return frac ? "fractional" : "full"; }

std::string thresholds_line(const std::vector<double>& thresholds, int precision) {
    if (thresholds.empty()) return "thresholds: (none)\n";
    std::string out = "thresholds: ";
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        if (i > 0) out += ", ";
        out += format_fixed(thresholds[i], precision);
    }
    out += '\n';
    return out;
}

json stats_json(const std::optional<PairwiseStats>& stats) {
    if (!stats) return nullptr;
    json j;
    j["n_values"] = stats->n_values;
    j["n_pairs"] = stats->n_pairs;
    j["mean"] = stats->mean;
    if (stats->sd) {
        j["sd"] = *stats->sd;
    } else {
        j["sd"] = nullptr;
    }
    j["max"] = stats->max;
    return j;
}

struct StatRowSpec {
    const char* name;
    bool counts_row;
};

constexpr StatRowSpec kStatRows[] = {
    {"n", true}, {"pairs", true}, {"M", false}, {"SD", false}, {"MAX", false}};

std::string stat_cell(const std::optional<PairwiseStats>& stats, std::string_view row,
                      int precision) {
    if (!stats) return "";
    if (row == "n") return std::to_string(stats->n_values);
    if (row == "pairs") return std::to_string(stats->n_pairs);
    if (row == "M") return format_fixed(stats->mean, precision);
    if (row == "SD") return stats->sd ? format_fixed(*stats->sd, precision) : "";
    return format_fixed(stats->max, precision);
}

std::string comparison_rule(const ComparisonVerdict& v, int precision) {
    const std::string frac = format_fixed(v.remarkable_fraction, precision);
    switch (v.verdict) {
        case Verdict::WithinExpected: return "diff <= mean";
        case Verdict::AboveExpected: return "mean < diff < " + frac + "*MAX";
        case Verdict::Remarkable: return "diff >= " + frac + "*MAX";
    }
    return "";
}

}  // namespace

std::string render_benchmark_table(const BenchmarkTable& table, const RenderSpec& spec) {
    auto rows_for = [&](auto&& emit_row) {
        for (std::size_t p = 0; p < table.periods.size(); ++p) {
            for (const auto& row : kStatRows) {
                if (row.counts_row && !spec.include_counts) continue;
                std::vector<std::string> cells;
                for (std::size_t i = 0; i < table.indicators.size(); ++i) {
                    cells.push_back(stat_cell(table.cell(i, p), row.name, spec.precision));
                }
                emit_row(p, row.name, cells);
            }
        }
    };

    if (spec.format == OutputFormat::Csv) {
        std::vector<std::string> header = {"period", "stat"};
        for (IndicatorId id : table.indicators) header.emplace_back(column_name(id));
        std::string out = csv_row(header);
        rows_for([&](std::size_t p, std::string_view stat, std::vector<std::string>& cells) {
            std::vector<std::string> row = {table.periods[p], std::string(stat)};
            row.insert(row.end(), cells.begin(), cells.end());
            out += csv_row(row);
        });
        return out;
    }

    if (spec.format == OutputFormat::Json) {
        json root;
        root["field"] = table.field;
        root["counting"] = counting_label(table.frac_counting);
        root["indicators"] = json::array();
        for (IndicatorId id : table.indicators) {
            root["indicators"].push_back(std::string(column_name(id)));
        }
        root["periods"] = json::array();
        for (std::size_t p = 0; p < table.periods.size(); ++p) {
            json block;
            block["period"] = table.periods[p];
            block["stats"] = json::object();
            for (std::size_t i = 0; i < table.indicators.size(); ++i) {
                block["stats"][std::string(column_name(table.indicators[i]))] =
                    stats_json(table.cell(i, p));
            }
            root["periods"].push_back(std::move(block));
        }
        return root.dump(2) + "\n";
    }

    // Markdown: one block per period, Table 1 layout.
    std::string out = "Pairwise-difference benchmarks: field \"" + table.field +
                      "\", " + counting_label(table.frac_counting) + " counting\n";
    std::vector<std::string> header = {"stats"};
    for (IndicatorId id : table.indicators) {
        header.emplace_back(display_name(id));
    }
    if (table.periods.empty()) {
        out += '\n' + md_row(header) + md_separator(header.size());
        return out;
    }
    std::string current_block;
    std::size_t current_period = static_cast<std::size_t>(-1);
    rows_for([&](std::size_t p, std::string_view stat, std::vector<std::string>& cells) {
        if (p != current_period) {
            current_period = p;
            out += "\n### " + table.periods[p] + "\n\n";
            out += md_row(header) + md_separator(header.size());
        }
        std::vector<std::string> row = {std::string(stat)};
        row.insert(row.end(), cells.begin(), cells.end());
        out += md_row(row);
    });
    return out;
}

std::string render_css_listings(std::span<const CssListing> listings,
                                const RenderSpec& spec) {
    auto bound_cell = [&](const CssPartition& part, int cls, int offset) -> std::string {
        // offset -1: lower bound of the class, 0: upper bound.
        int idx = cls - 1 + offset;
        if (idx < 0 || idx >= static_cast<int>(part.thresholds.size())) return "";
        return format_fixed(part.thresholds[static_cast<std::size_t>(idx)],
                            spec.precision);
    };

    if (spec.format == OutputFormat::Csv) {
        std::string out = csv_row({"period", "indicator", "university", "value", "class",
                                   "label", "class_lower", "class_upper"});
        for (const auto& l : listings) {
            for (std::size_t i = 0; i < l.universities.size(); ++i) {
                int cls = l.partition.assignments[i];
                out += csv_row({l.period, std::string(column_name(l.indicator)),
                                l.universities[i], format_fixed(l.values[i], spec.precision),
                                std::to_string(cls),
                                css_class_label(cls, l.partition.requested_classes),
                                bound_cell(l.partition, cls, -1),
                                bound_cell(l.partition, cls, 0)});
            }
        }
        return out;
    }

    if (spec.format == OutputFormat::Json) {
        json root = json::array();
        for (const auto& l : listings) {
            json block;
            block["period"] = l.period;
            block["indicator"] = std::string(column_name(l.indicator));
            block["requested_classes"] = l.partition.requested_classes;
            block["generated_classes"] = l.partition.generated_classes;
            block["thresholds"] = l.partition.thresholds;
            block["class_sizes"] = l.partition.class_sizes;
            block["universities"] = json::array();
            for (std::size_t i = 0; i < l.universities.size(); ++i) {
                int cls = l.partition.assignments[i];
                json entry;
                entry["university"] = l.universities[i];
                entry["value"] = l.values[i];
                entry["class"] = cls;
                entry["label"] = css_class_label(cls, l.partition.requested_classes);
                block["universities"].push_back(std::move(entry));
            }
            root.push_back(std::move(block));
        }
        return root.dump(2) + "\n";
    }

    std::string out;
    for (const auto& l : listings) {
        if (!out.empty()) out += '\n';
        out += "### " + std::string(display_name(l.indicator)) + ", " + l.period + " (" +
               std::to_string(l.partition.requested_classes) + " classes requested, " +
               std::to_string(l.partition.generated_classes) + " generated)\n\n";
        out += thresholds_line(l.partition.thresholds, spec.precision);
        out += '\n';
        out += md_row({"university", "value", "class", "label"});
        out += md_separator(4);
        for (std::size_t i = 0; i < l.universities.size(); ++i) {
            int cls = l.partition.assignments[i];
            out += md_row({md_escape(l.universities[i]),
                           format_fixed(l.values[i], spec.precision), std::to_string(cls),
                           css_class_label(cls, l.partition.requested_classes)});
        }
    }
    return out;
}

std::string render_group_benchmarks(std::span<const GroupBenchmarkBlock> blocks,
                                    const RenderSpec& spec) {
    if (spec.format == OutputFormat::Csv) {
        std::string out = csv_row({"period", "indicator", "class", "label", "n_values",
                                   "n_pairs", "M", "SD", "MAX"});
        for (const auto& b : blocks) {
            for (const auto& row : b.benchmark.rows) {
                out += csv_row({b.period, std::string(column_name(b.indicator)),
                                std::to_string(row.class_index), row.label,
                                std::to_string(row.n_values), std::to_string(row.n_pairs),
                                stat_cell(row.stats, "M", spec.precision),
                                stat_cell(row.stats, "SD", spec.precision),
                                stat_cell(row.stats, "MAX", spec.precision)});
            }
        }
        return out;
    }

    if (spec.format == OutputFormat::Json) {
        json root = json::array();
        for (const auto& b : blocks) {
            json block;
            block["period"] = b.period;
            block["indicator"] = std::string(column_name(b.indicator));
            block["requested_classes"] = b.benchmark.requested_classes;
            block["generated_classes"] = b.benchmark.generated_classes;
            block["thresholds"] = b.benchmark.thresholds;
            block["rows"] = json::array();
            for (const auto& row : b.benchmark.rows) {
                json r;
                r["class"] = row.class_index;
                r["label"] = row.label;
                r["n_values"] = row.n_values;
                r["n_pairs"] = row.n_pairs;
                r["stats"] = stats_json(row.stats);
                block["rows"].push_back(std::move(r));
            }
            root.push_back(std::move(block));
        }
        return root.dump(2) + "\n";
    }

    std::string out;
    for (const auto& b : blocks) {
        if (!out.empty()) out += '\n';
        out += "### " + std::string(display_name(b.indicator)) + ", " + b.period + " (" +
               std::to_string(b.benchmark.requested_classes) + " classes requested, " +
               std::to_string(b.benchmark.generated_classes) + " generated)\n\n";
        out += thresholds_line(b.benchmark.thresholds, spec.precision);
        out += '\n';
        out += md_row({"class", "label", "n", "pairs", "M", "SD", "MAX"});
        out += md_separator(7);
        for (const auto& row : b.benchmark.rows) {
            out += md_row({std::to_string(row.class_index), row.label,
                           std::to_string(row.n_values), std::to_string(row.n_pairs),
                           stat_cell(row.stats, "M", spec.precision),
                           stat_cell(row.stats, "SD", spec.precision),
                           stat_cell(row.stats, "MAX", spec.precision)});
        }
    }
    return out;
}

std::string render_comparisons(std::span<const ComparisonRow> rows,
                               const RenderSpec& spec) {
    if (spec.format == OutputFormat::Csv) {
        std::string out = csv_row({"period", "indicator", "university_a", "university_b",
                                   "value_a", "value_b", "diff", "benchmark_mean",
                                   "benchmark_max", "threshold", "verdict", "rule"});
        for (const auto& r : rows) {
            const auto& v = r.verdict;
            out += csv_row({r.period, std::string(column_name(v.indicator)),
                            r.university_a, r.university_b,
                            format_fixed(r.value_a, spec.precision),
                            format_fixed(r.value_b, spec.precision),
                            format_fixed(v.diff, spec.precision),
                            format_fixed(v.benchmark_mean, spec.precision),
                            format_fixed(v.benchmark_max, spec.precision),
                            format_fixed(v.remarkable_fraction * v.benchmark_max,
                                         spec.precision),
                            std::string(verdict_name(v.verdict)),
                            comparison_rule(v, spec.precision)});
        }
        return out;
    }

    if (spec.format == OutputFormat::Json) {
        json root = json::array();
        for (const auto& r : rows) {
            const auto& v = r.verdict;
            json entry;
            entry["period"] = r.period;
            entry["indicator"] = std::string(column_name(v.indicator));
            entry["university_a"] = r.university_a;
            entry["university_b"] = r.university_b;
            entry["value_a"] = r.value_a;
            entry["value_b"] = r.value_b;
            entry["diff"] = v.diff;
            entry["benchmark_mean"] = v.benchmark_mean;
            entry["benchmark_max"] = v.benchmark_max;
            entry["remarkable_fraction"] = v.remarkable_fraction;
            entry["threshold"] = v.remarkable_fraction * v.benchmark_max;
            entry["verdict"] = std::string(verdict_name(v.verdict));
            entry["rule"] = comparison_rule(v, spec.precision);
            root.push_back(std::move(entry));
        }
        return root.dump(2) + "\n";
    }

    std::string out;
    if (!rows.empty()) {
        const auto& first = rows.front();
        out += "Comparison on " + std::string(display_name(first.verdict.indicator)) +
               ": \"" + first.university_a + "\" vs \"" + first.university_b +
               "\" (remarkable fraction " +
               format_fixed(first.verdict.remarkable_fraction, spec.precision) + ")\n\n";
    }
    out += md_row({"period", "value_a", "value_b", "diff", "M", "MAX", "threshold",
                   "verdict", "rule"});
    out += md_separator(9);
    for (const auto& r : rows) {
        const auto& v = r.verdict;
        out += md_row({r.period, format_fixed(r.value_a, spec.precision),
                       format_fixed(r.value_b, spec.precision),
                       format_fixed(v.diff, spec.precision),
                       format_fixed(v.benchmark_mean, spec.precision),
                       format_fixed(v.benchmark_max, spec.precision),
                       format_fixed(v.remarkable_fraction * v.benchmark_max,
                                    spec.precision),
                       std::string(verdict_name(v.verdict)),
                       comparison_rule(v, spec.precision)});
    }
    return out;
}

}  // namespace leidenbench
