#pragma once

#include "rsbf/truth_table.hpp"
#include "rsbf/walsh.hpp"

namespace rsbf {

// nl = 2^{n-1} - max|W|/2.
int nonlinearity(const WalshSpectrum& spec);
int nonlinearity(const TruthTable& tt);

// Bits to flip to reach weight 2^{n-1}.
int balance_deficit(const TruthTable& tt);

// Largest monomial size with a nonzero coefficient in the algebraic normal
// form; 0 for constants. Computed with the fast Moebius transform.
int algebraic_degree(const TruthTable& tt);

// Upper bound on nonlinearity: 2^{n-1} - 2^{n/2-1} for even n,
// 2*floor(2^{n-2} - 2^{n/2-2}) for odd n.
int covering_bound(int n);

inline int bent_nonlinearity(int n) { return (1 << (n - 1)) - (1 << (n / 2 - 1)); }

struct PropertyReport {
    int n = 0;
    int nonlinearity = 0;
    int balance_deficit = 0;
    int algebraic_degree = 0;
    bool is_bent = false;
    std::int32_t max_abs_walsh = 0;
    int max_count = 0;
};

PropertyReport analyze(const TruthTable& tt);

}  // namespace rsbf
