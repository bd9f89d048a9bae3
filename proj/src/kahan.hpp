#pragma once

#include <cmath>

namespace leidenbench::detail {

// Neumaier-compensated accumulator. Recovers the low-order bits lost when
// adding terms of very different magnitude, which keeps the closed-form
// pair sums accurate for series up to 10^6 values.
struct KahanSum {
    double sum = 0.0;
    double compensation = 0.0;

    void add(double value) {
        double t = sum + value;
        if (std::abs(sum) >= std::abs(value)) {
            compensation += (sum - t) + value;
        } else {
            compensation += (value - t) + sum;
        }
        sum = t;
    }

    [[nodiscard]] double value() const { return sum + compensation; }
};

}  // namespace leidenbench::detail
