#include "rsbf/stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsbf {

namespace {

double median_sorted(const double* values, std::size_t count) {
    if (count % 2 == 1) return values[count / 2];
    return 0.5 * (values[count / 2 - 1] + values[count / 2]);
}

}  // namespace

FiveNum five_number_summary(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("summary of an empty sample");
    std::sort(values.begin(), values.end());
    const std::size_t count = values.size();
    const std::size_t half = count / 2;

    FiveNum out;
    out.min = values.front();
    out.max = values.back();
    out.median = median_sorted(values.data(), count);
    if (half == 0) {
        out.q1 = out.q3 = out.median;
    } else {
        out.q1 = median_sorted(values.data(), half);
        out.q3 = median_sorted(values.data() + (count - half), half);
    }
    return out;
}

}  // namespace rsbf
