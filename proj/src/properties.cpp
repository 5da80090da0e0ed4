#include "rsbf/properties.hpp"

#include <bit>
#include <cstdlib>

namespace rsbf {

int nonlinearity(const WalshSpectrum& spec) {
    return (1 << (spec.n - 1)) - max_abs_walsh(spec) / 2;
}

int nonlinearity(const TruthTable& tt) {
    return nonlinearity(walsh_fast(tt));
}

int balance_deficit(const TruthTable& tt) {
    const auto weight = static_cast<std::int64_t>(tt.weight());
    const std::int64_t half = std::int64_t(1) << (tt.n - 1);
    return static_cast<int>(std::llabs(weight - half));
}

int algebraic_degree(const TruthTable& tt) {
    std::vector<std::uint8_t> anf = tt.bits;
    const std::size_t size = anf.size();
    for (std::size_t len = 1; len < size; len <<= 1)
        for (std::size_t i = 0; i < size; i += len << 1)
            for (std::size_t j = i; j < i + len; ++j)
                anf[j + len] ^= anf[j];

    int degree = 0;
    for (std::size_t u = 0; u < size; ++u)
        if (anf[u]) {
            const int w = std::popcount(u);
            if (w > degree) degree = w;
        }
    return degree;
}

namespace {

// Smallest integer r with r*r >= m.
std::uint64_t ceil_sqrt(std::uint64_t m) {
    std::uint64_t r = 0;
    while (r * r < m) ++r;
    return r;
}

}  // namespace

int covering_bound(int n) {
    check_var_count(n);
    if (n % 2 == 0) return bent_nonlinearity(n);
    // Odd n: 2^{n/2-2} is irrational, so floor(2^{n-2} - 2^{n/2-2}) equals
    // 2^{n-2} - ceil(sqrt(2^{n-4})) once n >= 5.
    if (n == 1) return 0;
    if (n == 3) return 2;
    const std::uint64_t root = ceil_sqrt(std::uint64_t(1) << (n - 4));
    return static_cast<int>(2 * ((std::uint64_t(1) << (n - 2)) - root));
}

PropertyReport analyze(const TruthTable& tt) {
    PropertyReport report;
    report.n = tt.n;
    const WalshSpectrum spec = walsh_fast(tt);
    report.max_abs_walsh = max_abs_walsh(spec);
    report.max_count = max_abs_count(spec);
    report.nonlinearity = nonlinearity(spec);
    report.balance_deficit = balance_deficit(tt);
    report.algebraic_degree = algebraic_degree(tt);
    report.is_bent = tt.n % 2 == 0 && report.nonlinearity == bent_nonlinearity(tt.n);
    return report;
}

}  // namespace rsbf
