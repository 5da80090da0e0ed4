#pragma once

#include <cstdint>
#include <vector>

#include "rsbf/truth_table.hpp"

namespace rsbf {

// Spectrum of signed correlations W(a) between f and the linear functions
// a.x, one entry per mask a in row-index order. Entries are exact integers
// in [-2^n, 2^n].
struct WalshSpectrum {
    int n = 0;
    std::vector<std::int32_t> values;

    std::size_t size() const { return std::size_t(1) << n; }
};

enum class WalshMode { naive, fast };

// In-place butterfly over a length-2^k signal. After the pass, v[a] holds
// sum_x (-1)^{popcount(a & x)} * v_in[x].
void fwht_inplace(std::int32_t* v, std::size_t size);

// Serial reference: the correlation sums computed by a direct double loop,
// 2^{2n} work. Kept as the oracle for the butterfly version.
WalshSpectrum walsh_naive(const TruthTable& tt);

// Production path: butterfly over the +/-1 signal, n*2^n work.
WalshSpectrum walsh_fast(const TruthTable& tt);

WalshSpectrum walsh_transform(const TruthTable& tt, WalshMode mode);

std::int32_t max_abs_walsh(const WalshSpectrum& spec);

// Number of positions attaining max |W(a)|, the whole spectrum included.
int max_abs_count(const WalshSpectrum& spec);

}  // namespace rsbf
