#include "rsbf/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsbf/properties.hpp"
#include "rsbf/walsh.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rsbf {

RsGenotype genotype_from_integer(int n, std::uint64_t value) {
    const int g_n = burnside_exponent(n);
    RsGenotype g = RsGenotype::zeros(n);
    for (int j = 0; j < g_n; ++j) g.bits[j] = static_cast<std::uint8_t>((value >> j) & 1u);
    return g;
}

namespace {

constexpr std::uint64_t kChunk = 4096;

struct ChunkFold {
    int best_nl = -1;
    std::uint64_t count = 0;
    std::uint64_t witness = 0;

    int balanced_nl = -1;
    std::uint64_t balanced_count = 0;
    std::uint64_t balanced_witness = 0;
};

void scan_range(int n, const OrbitTable& orbits, std::uint64_t lo, std::uint64_t hi,
                ChunkFold& fold) {
    TruthTable tt = TruthTable::zeros(n);
    for (std::uint64_t value = lo; value < hi; ++value) {
        for (std::size_t i = 0; i < tt.bits.size(); ++i)
            tt.bits[i] = static_cast<std::uint8_t>((value >> orbits.orbit_of[i]) & 1u);
        const WalshSpectrum spectrum = walsh_naive(tt);
        const int nl = nonlinearity(spectrum);

        if (nl > fold.best_nl) {
            fold.best_nl = nl;
            fold.count = 1;
            fold.witness = value;
        } else if (nl == fold.best_nl) {
            ++fold.count;
        }

        if (spectrum.values[0] == 0) {
            if (nl > fold.balanced_nl) {
                fold.balanced_nl = nl;
                fold.balanced_count = 1;
                fold.balanced_witness = value;
            } else if (nl == fold.balanced_nl) {
                ++fold.balanced_count;
            }
        }
    }
}

}  // namespace

ExhaustReport exhaust_rs(int n, std::uint64_t limit, int jobs) {
    check_var_count(n);
    const int g_n = burnside_exponent(n);
    if (g_n >= 64 || (std::uint64_t(1) << g_n) > limit)
        throw std::invalid_argument("exhaustive scan of n=" + std::to_string(n) + " needs 2^" +
                                    std::to_string(g_n) + " evaluations, over the limit of " +
                                    std::to_string(limit));

    const std::uint64_t total = std::uint64_t(1) << g_n;
    const OrbitTable orbits = OrbitTable::build(n);

    const std::uint64_t chunk_count = (total + kChunk - 1) / kChunk;
    std::vector<ChunkFold> folds(chunk_count);

#ifdef _OPENMP
    if (jobs < 1) jobs = omp_get_max_threads();
#else
    jobs = 1;
#endif

#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunk_count); ++c) {
        const std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunk;
        const std::uint64_t hi = std::min(lo + kChunk, total);
        scan_range(n, orbits, lo, hi, folds[c]);
    }

    ExhaustReport report;
    report.n = n;
    report.total = total;
    ChunkFold merged;
    for (const ChunkFold& fold : folds) {
        if (fold.best_nl > merged.best_nl) {
            merged.best_nl = fold.best_nl;
            merged.count = fold.count;
            merged.witness = fold.witness;
        } else if (fold.best_nl == merged.best_nl) {
            merged.count += fold.count;
        }
        if (fold.balanced_nl > merged.balanced_nl) {
            merged.balanced_nl = fold.balanced_nl;
            merged.balanced_count = fold.balanced_count;
            merged.balanced_witness = fold.balanced_witness;
        } else if (fold.balanced_nl >= 0 && fold.balanced_nl == merged.balanced_nl) {
            merged.balanced_count += fold.balanced_count;
        }
    }

    report.best_nonlinearity = merged.best_nl;
    report.best_count = merged.count;
    report.best_witness = merged.witness;
    report.any_balanced = merged.balanced_nl >= 0;
    report.best_balanced_nonlinearity = merged.balanced_nl;
    report.best_balanced_count = merged.balanced_count;
    report.best_balanced_witness = merged.balanced_witness;
    return report;
}

}  // namespace rsbf
