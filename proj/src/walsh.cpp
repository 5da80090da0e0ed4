#include "rsbf/walsh.hpp"

#include <bit>
#include <cstdlib>

namespace rsbf {

void fwht_inplace(std::int32_t* v, std::size_t size) {
    for (std::size_t len = 1; len < size; len <<= 1) {
        for (std::size_t i = 0; i < size; i += len << 1) {
            for (std::size_t j = i; j < i + len; ++j) {
                const std::int32_t x = v[j];
                const std::int32_t y = v[j + len];
                v[j] = x + y;
                v[j + len] = x - y;
            }
        }
    }
}

WalshSpectrum walsh_naive(const TruthTable& tt) {
    const std::size_t size = tt.size();
    WalshSpectrum spec;
    spec.n = tt.n;
    spec.values.resize(size);
    for (std::size_t a = 0; a < size; ++a) {
        std::int32_t sum = 0;
        for (std::size_t x = 0; x < size; ++x) {
            const int exponent = tt.bits[x] ^ (std::popcount(a & x) & 1);
            sum += exponent ? -1 : 1;
        }
        spec.values[a] = sum;
    }
    return spec;
}

WalshSpectrum walsh_fast(const TruthTable& tt) {
    const std::size_t size = tt.size();
    WalshSpectrum spec;
    spec.n = tt.n;
    spec.values.resize(size);
    for (std::size_t i = 0; i < size; ++i)
        spec.values[i] = 1 - 2 * std::int32_t(tt.bits[i]);
    fwht_inplace(spec.values.data(), size);
    return spec;
}

WalshSpectrum walsh_transform(const TruthTable& tt, WalshMode mode) {
    return mode == WalshMode::naive ? walsh_naive(tt) : walsh_fast(tt);
}

std::int32_t max_abs_walsh(const WalshSpectrum& spec) {
    std::int32_t max = 0;
    for (auto v : spec.values) {
        const std::int32_t a = std::abs(v);
        if (a > max) max = a;
    }
    return max;
}

int max_abs_count(const WalshSpectrum& spec) {
    const std::int32_t max = max_abs_walsh(spec);
    int count = 0;
    for (auto v : spec.values)
        if (std::abs(v) == max) ++count;
    return count;
}

}  // namespace rsbf
