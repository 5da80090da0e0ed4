#pragma once

#include <vector>

namespace rsbf {

// Five-number summary with quartiles computed as medians of the lower and
// upper halves, the median itself excluded from both halves when the sample
// size is odd.
struct FiveNum {
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
};

FiveNum five_number_summary(std::vector<double> values);

}  // namespace rsbf
