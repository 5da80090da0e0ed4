// Wall-clock comparison of the production kernels against their serial
// references: butterfly vs direct-sum spectrum, threaded vs single-thread
// exhaustive scan, and threaded vs single-thread run batches.
#include <chrono>
#include <cstdint>
#include <iostream>
#include <vector>

#include "rsbf/oracle.hpp"
#include "rsbf/properties.hpp"
#include "rsbf/rng.hpp"
#include "rsbf/search.hpp"
#include "rsbf/walsh.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace rsbf;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

TruthTable random_table(int n, RandomStream& rng) {
    TruthTable tt = TruthTable::zeros(n);
    for (auto& b : tt.bits) b = static_cast<std::uint8_t>(rng.next_u64() & 1u);
    return tt;
}

void bench_walsh() {
    std::cout << "spectrum: direct reference vs butterfly\n";
    for (int n : {8, 10, 12}) {
        RandomStream rng(7 + n);
        const int reps = n <= 10 ? 50 : 10;
        std::vector<TruthTable> tables;
        for (int i = 0; i < reps; ++i) tables.push_back(random_table(n, rng));

        std::int64_t checksum = 0;
        auto start = Clock::now();
        for (const auto& tt : tables) checksum += walsh_naive(tt).values[1];
        const double naive_ms = ms_since(start);

        std::int64_t checksum_fast = 0;
        start = Clock::now();
        for (const auto& tt : tables) checksum_fast += walsh_fast(tt).values[1];
        const double fast_ms = ms_since(start);

        if (checksum != checksum_fast) {
            std::cout << "  n=" << n << ": MISMATCH between reference and butterfly\n";
            continue;
        }
        std::cout << "  n=" << n << ", " << reps << " tables: reference " << naive_ms
                  << " ms, butterfly " << fast_ms << " ms (" << naive_ms / fast_ms << "x)\n";
    }
}

void bench_exhaust() {
#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::cout << "exhaustive scan of n=6 (16384 functions)\n";
    auto start = Clock::now();
    const ExhaustReport serial = exhaust_rs(6, 1u << 20, 1);
    const double serial_ms = ms_since(start);

    start = Clock::now();
    const ExhaustReport parallel = exhaust_rs(6, 1u << 20, threads);
    const double parallel_ms = ms_since(start);

    if (serial.best_nonlinearity != parallel.best_nonlinearity ||
        serial.best_witness != parallel.best_witness) {
        std::cout << "  MISMATCH between 1-thread and " << threads << "-thread scans\n";
        return;
    }
    std::cout << "  1 thread " << serial_ms << " ms, " << threads << " threads " << parallel_ms
              << " ms (" << serial_ms / parallel_ms << "x), best nonlinearity "
              << serial.best_nonlinearity << "\n";
}

void bench_batch() {
#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    RunConfig cfg;
    cfg.n = 8;
    cfg.budget = 20000;
    cfg.seed = 1;
    const int runs = 8;

    std::cout << "batch of " << runs << " runs (n=8, 20000 evaluations each)\n";
    auto start = Clock::now();
    const BatchResult serial = run_batch(cfg, runs, 1);
    const double serial_ms = ms_since(start);

    start = Clock::now();
    const BatchResult parallel = run_batch(cfg, runs, threads);
    const double parallel_ms = ms_since(start);

    if (serial.nonlinearity_summary.max != parallel.nonlinearity_summary.max) {
        std::cout << "  MISMATCH between 1-thread and " << threads << "-thread batches\n";
        return;
    }
    std::cout << "  1 thread " << serial_ms << " ms, " << threads << " threads " << parallel_ms
              << " ms (" << serial_ms / parallel_ms << "x), best nonlinearity "
              << serial.nonlinearity_summary.max << "\n";
}

}  // namespace

int main() {
    bench_walsh();
    bench_exhaust();
    bench_batch();
    return 0;
}
