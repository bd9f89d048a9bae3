#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace leidenbench {

/// The six size-independent Leiden Ranking indicators handled by this
/// toolkit. Size-dependent indicators (publication counts, total scores)
/// are out of scope: mean pairwise differences are not meaningful for them.
enum class IndicatorId : int {
    MNCS = 0,
    PP_top1,
    PP_top10,
    PP_top50,
    PP_collab,
    PP_int_collab,
};

inline constexpr std::size_t kIndicatorCount = 6;

inline constexpr std::array<IndicatorId, kIndicatorCount> kAllIndicators = {
    IndicatorId::MNCS,      IndicatorId::PP_top1,   IndicatorId::PP_top10,
    IndicatorId::PP_top50,  IndicatorId::PP_collab, IndicatorId::PP_int_collab,
};

/// Column name as it appears in the "Results" worksheet export.
[[nodiscard]] std::string_view column_name(IndicatorId id);

/// Human-readable name, e.g. "PP(top 10%)".
[[nodiscard]] std::string_view display_name(IndicatorId id);

/// Inverse of column_name. Exact, case-sensitive match.
[[nodiscard]] std::optional<IndicatorId> indicator_from_column(std::string_view name);

[[nodiscard]] constexpr std::size_t indicator_index(IndicatorId id) {
    return static_cast<std::size_t>(id);
}

}  // namespace leidenbench
