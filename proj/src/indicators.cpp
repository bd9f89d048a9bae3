#include "leidenbench/indicators.hpp"

namespace leidenbench {

namespace {

constexpr std::array<std::string_view, kIndicatorCount> kColumnNames = {
    "MNCS", "PP_top1", "PP_top10", "PP_top50", "PP_collab", "PP_int_collab"};

constexpr std::array<std::string_view, kIndicatorCount> kDisplayNames = {
    "MNCS",       "PP(top 1%)", "PP(top 10%)",
    "PP(top 50%)", "PP(collab)", "PP(int collab)"};

}  // namespace

std::string_view column_name(IndicatorId id) {
    return kColumnNames[indicator_index(id)];
}

std::string_view display_name(IndicatorId id) {
    return kDisplayNames[indicator_index(id)];
}

std::optional<IndicatorId> indicator_from_column(std::string_view name) {
    for (IndicatorId id : kAllIndicators) {
        if (column_name(id) == name) return id;
    }
    return std::nullopt;
}

}  // namespace leidenbench
