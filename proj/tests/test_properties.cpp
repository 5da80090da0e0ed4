#include <doctest.h>

#include <bit>

#include "rsbf/properties.hpp"
#include "rsbf/rng.hpp"

using namespace rsbf;

namespace {

// x0 x1 + x2 x3, the textbook quadratic bent function on four variables.
TruthTable quartic_bent() {
    TruthTable tt = TruthTable::zeros(4);
    for (std::size_t i = 0; i < 16; ++i) {
        const int x0 = (i >> 3) & 1, x1 = (i >> 2) & 1, x2 = (i >> 1) & 1, x3 = i & 1;
        tt.bits[i] = static_cast<std::uint8_t>((x0 & x1) ^ (x2 & x3));
    }
    return tt;
}

}  // namespace

TEST_CASE("quadratic bent function on four variables") {
    const TruthTable tt = quartic_bent();
    const PropertyReport report = analyze(tt);
    CHECK(report.nonlinearity == 6);
    CHECK(report.algebraic_degree == 2);
    CHECK(tt.weight() == 6);
    CHECK(report.balance_deficit == 2);
    CHECK(report.is_bent);
    CHECK(report.max_abs_walsh == 4);
    CHECK(report.max_count == 16);  // flat spectrum
}

TEST_CASE("degree of simple functions") {
    CHECK(algebraic_degree(TruthTable::zeros(4)) == 0);
    TruthTable ones = TruthTable::zeros(4);
    for (auto& b : ones.bits) b = 1;
    CHECK(algebraic_degree(ones) == 0);

    TruthTable parity = TruthTable::zeros(5);
    for (std::size_t i = 0; i < 32; ++i) parity.bits[i] = std::popcount(i) & 1;
    CHECK(algebraic_degree(parity) == 1);
    CHECK(nonlinearity(parity) == 0);

    TruthTable conj = TruthTable::zeros(3);
    conj.bits[7] = 1;  // x0 x1 x2
    CHECK(algebraic_degree(conj) == 3);
}

TEST_CASE("degree never exceeds n and linear functions score 1") {
    RandomStream rng(5);
    for (int n = 1; n <= 8; ++n) {
        TruthTable tt = TruthTable::zeros(n);
        for (auto& b : tt.bits) b = rng.next_bool();
        CHECK(algebraic_degree(tt) <= n);

        const std::uint32_t mask = static_cast<std::uint32_t>(rng.next_below((1u << n) - 1) + 1);
        TruthTable lin = TruthTable::zeros(n);
        for (std::size_t i = 0; i < lin.size(); ++i)
            lin.bits[i] = std::popcount(mask & static_cast<std::uint32_t>(i)) & 1;
        CHECK(algebraic_degree(lin) == 1);
        CHECK(nonlinearity(lin) == 0);
    }
}

TEST_CASE("nonlinearity upper bounds per variable count") {
    const int expected[] = {0,  1,  2,    6,    12,   28,   58,    120,
                            244, 496, 1000, 2016, 4050, 8128, 16292, 32640};
    for (int n = 1; n <= 16; ++n) CHECK(covering_bound(n) == expected[n - 1]);

    // Even n: the bound is the flat-spectrum value and bent functions meet it.
    for (int n = 2; n <= 16; n += 2) CHECK(covering_bound(n) == bent_nonlinearity(n));
}

TEST_CASE("random tables respect the bound") {
    RandomStream rng(77);
    for (int n = 3; n <= 9; ++n) {
        for (int rep = 0; rep < 50; ++rep) {
            TruthTable tt = TruthTable::zeros(n);
            for (auto& b : tt.bits) b = rng.next_bool();
            CHECK(nonlinearity(tt) <= covering_bound(n));
        }
    }
}

TEST_CASE("balance deficit counts the distance to half weight") {
    CHECK(balance_deficit(TruthTable::zeros(4)) == 8);
    CHECK(balance_deficit(quartic_bent()) == 2);
    CHECK(balance_deficit(TruthTable(2, {0, 1, 1, 0})) == 0);

    // Matches the spectrum reading |W(0)| / 2.
    RandomStream rng(11);
    for (int rep = 0; rep < 100; ++rep) {
        TruthTable tt = TruthTable::zeros(6);
        for (auto& b : tt.bits) b = rng.next_bool();
        CHECK(balance_deficit(tt) == std::abs(walsh_fast(tt).values[0]) / 2);
    }
}
