#pragma once

#include <array>
#include <optional>
#include <string>

#include "leidenbench/indicators.hpp"

namespace leidenbench {

/// One university x field x period x counting-mode row of the ranking
/// results. An absent indicator value means the source cell was empty or
/// non-numeric. Present values satisfy MNCS >= 0 and PP_* in [0, 1].
struct IndicatorRecord {
    std::string university;
    std::string field;
    std::string period;
    bool frac_counting = false;  // false = full counting
    std::array<std::optional<double>, kIndicatorCount> values{};

    [[nodiscard]] const std::optional<double>& value(IndicatorId id) const {
        return values[indicator_index(id)];
    }
    [[nodiscard]] std::optional<double>& value(IndicatorId id) {
        return values[indicator_index(id)];
    }

    friend bool operator==(const IndicatorRecord&, const IndicatorRecord&) = default;
};

/// Selects one field x period x counting-mode slice of the dataset.
/// All three members must be set; the library applies no defaults.
struct DatasetFilter {
    std::string field;
    std::string period;
    bool frac_counting = false;
};

}  // namespace leidenbench
