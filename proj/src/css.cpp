#include "leidenbench/css.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kahan.hpp"

namespace leidenbench {

CssPartition css_partition(std::span<const double> values, int requested_classes) {
    if (values.empty()) {
        throw std::invalid_argument("css_partition: series is empty");
    }
    if (requested_classes < 2) {
        throw std::invalid_argument("css_partition: requested_classes must be >= 2");
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("css_partition: non-finite value in series");
        }
    }

    CssPartition part;
    part.requested_classes = requested_classes;
    part.assignments.assign(values.size(), 0);

    std::vector<std::size_t> current(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) current[i] = i;

    auto close_out = [&](int cls) {
        for (std::size_t idx : current) part.assignments[idx] = cls;
        part.class_sizes.push_back(current.size());
        part.generated_classes = cls;
    };

    for (int cls = 1; cls <= requested_classes; ++cls) {
        if (cls == requested_classes) {
            close_out(cls);
            break;
        }

        auto [lo, hi] = std::minmax_element(
            current.begin(), current.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        if (values[*lo] == values[*hi]) {
            // Sample collapsed onto its mean; no further scores are generated.
            close_out(cls);
            break;
        }

        detail::KahanSum sum;
        for (std::size_t idx : current) sum.add(values[idx]);
        const double mean = sum.value() / static_cast<double>(current.size());

        std::vector<std::size_t> below;
        std::vector<std::size_t> rest;
        for (std::size_t idx : current) {
            (values[idx] < mean ? below : rest).push_back(idx);
        }
        if (below.empty() || rest.empty()) {
            // Rounding of the mean can strand a near-constant sample.
            close_out(cls);
            break;
        }

        part.thresholds.push_back(mean);
        for (std::size_t idx : below) part.assignments[idx] = cls;
        part.class_sizes.push_back(below.size());
        current = std::move(rest);
    }
    return part;
}

int assign_class(double value, const CssPartition& partition) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument("assign_class: non-finite value");
    }
    auto it = std::upper_bound(partition.thresholds.begin(),
                               partition.thresholds.end(), value);
    return static_cast<int>(it - partition.thresholds.begin()) + 1;
}

std::string css_class_label(int index, int class_count) {
    static const char* kFourClassLabels[] = {"poorly cited", "fairly cited",
                                             "remarkably cited", "outstandingly cited"};
    if (class_count == 4 && index >= 1 && index <= 4) {
        return kFourClassLabels[index - 1];
    }
    return "class " + std::to_string(index);
}

}  // namespace leidenbench
