#pragma once

#include <cstdint>

#include "rsbf/orbits.hpp"

namespace rsbf {

// Ground truth for small n: every rotation symmetric function enumerated,
// scored with the serial reference transform.  Search engines and unit
// tests compare against these numbers.
struct ExhaustReport {
    int n = 0;
    std::uint64_t total = 0;  // 2^{g_n} functions scanned

    int best_nonlinearity = 0;
    std::uint64_t best_count = 0;    // functions attaining it
    std::uint64_t best_witness = 0;  // lowest genotype integer among them

    bool any_balanced = false;
    int best_balanced_nonlinearity = -1;
    std::uint64_t best_balanced_count = 0;
    std::uint64_t best_balanced_witness = 0;
};

// Genotype integers enumerate orbit-bit vectors with bit j = orbit j, so
// integer order is the tie-break order for witnesses.
RsGenotype genotype_from_integer(int n, std::uint64_t value);

// Scans all 2^{g_n} functions, splitting the range into fixed chunks that
// threads work through independently; chunk results merge in index order,
// so the report does not depend on the schedule.  Throws when 2^{g_n}
// exceeds `limit` rather than start an open-ended scan.
ExhaustReport exhaust_rs(int n, std::uint64_t limit, int jobs = 0);

}  // namespace rsbf
