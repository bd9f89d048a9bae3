#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace leidenbench {

/// Result of a Characteristics Scores and Scales run: ordered class-boundary
/// means (strictly increasing, one fewer than the generated classes) and a
/// 1-based class index per input value. Value v belongs to class j exactly
/// when threshold[j-2] <= v < threshold[j-1], with -inf and +inf sentinels
/// at the ends.
struct CssPartition {
    std::vector<double> thresholds;
    std::vector<int> assignments;          // per input value, in input order
    std::vector<std::uint64_t> class_sizes;
    int requested_classes = 0;
    int generated_classes = 0;
};

/// Partition a series into impact classes by iteratively truncating at the
/// mean: iteration k computes the mean of the current sample, assigns the
/// values strictly below it to class k and keeps the rest. After
/// requested_classes - 1 iterations the survivors form the top class.
///
/// Values equal to the current mean stay in the surviving sample. When an
/// iteration would assign nothing (the sample has collapsed onto its mean),
/// the survivors become the final class and fewer classes are generated
/// than requested.
///
/// Throws std::invalid_argument for an empty series or requested_classes < 2.
[[nodiscard]] CssPartition css_partition(std::span<const double> values,
                                         int requested_classes);

/// Class index for an arbitrary value against the stored thresholds.
/// Consistent with partition.assignments for every value that produced it.
[[nodiscard]] int assign_class(double value, const CssPartition& partition);

/// Label for a 1-based class index. A four-class run uses the canonical
/// labels "poorly cited" .. "outstandingly cited"; other class counts get
/// plain "class N" labels.
[[nodiscard]] std::string css_class_label(int index, int class_count);

}  // namespace leidenbench
