#include <doctest.h>

#include <bit>
#include <cstdlib>

#include "rsbf/rng.hpp"
#include "rsbf/walsh.hpp"

using namespace rsbf;

namespace {

TruthTable random_table(int n, RandomStream& rng) {
    TruthTable tt = TruthTable::zeros(n);
    for (auto& b : tt.bits) b = rng.next_bool();
    return tt;
}

TruthTable table_from_value(int n, std::uint64_t value) {
    TruthTable tt = TruthTable::zeros(n);
    for (std::size_t i = 0; i < tt.size(); ++i)
        tt.bits[i] = static_cast<std::uint8_t>((value >> i) & 1u);
    return tt;
}

}  // namespace

TEST_CASE("spectrum of a single variable") {
    // f(x) = x0 at n=2, table 0011: perfect correlation with the mask that
    // selects exactly x0, zero everywhere else.
    const TruthTable tt(2, {0, 0, 1, 1});
    const WalshSpectrum spec = walsh_naive(tt);
    CHECK(spec.values == std::vector<std::int32_t>{0, 0, 4, 0});
    CHECK(walsh_fast(tt).values == spec.values);
}

TEST_CASE("spectrum of constants and parity") {
    const WalshSpectrum zero = walsh_fast(TruthTable::zeros(3));
    CHECK(zero.values[0] == 8);
    for (std::size_t a = 1; a < 8; ++a) CHECK(zero.values[a] == 0);

    // Parity x0 xor x1 xor x2 correlates only with the all-ones mask.
    TruthTable parity = TruthTable::zeros(3);
    for (std::size_t i = 0; i < 8; ++i) parity.bits[i] = std::popcount(i) & 1;
    const WalshSpectrum spec = walsh_fast(parity);
    for (std::size_t a = 0; a < 7; ++a) CHECK(spec.values[a] == 0);
    CHECK(spec.values[7] == 8);
}

TEST_CASE("butterfly agrees with the direct sum on every n=4 table") {
    for (std::uint64_t value = 0; value < (1u << 16); ++value) {
        const TruthTable tt = table_from_value(4, value);
        if (walsh_fast(tt).values != walsh_naive(tt).values) {
            CHECK(value == ~0ull);  // fails loudly with the offending table
            return;
        }
    }
    CHECK(true);
}

TEST_CASE("butterfly agrees with the direct sum on random larger tables") {
    RandomStream rng(2024);
    for (int n = 5; n <= 10; ++n) {
        for (int rep = 0; rep < 100; ++rep) {
            const TruthTable tt = random_table(n, rng);
            REQUIRE(walsh_fast(tt).values == walsh_naive(tt).values);
        }
    }
}

TEST_CASE("spectrum values are even and bounded") {
    RandomStream rng(99);
    for (int rep = 0; rep < 200; ++rep) {
        const TruthTable tt = random_table(7, rng);
        const WalshSpectrum spec = walsh_fast(tt);
        for (auto v : spec.values) {
            CHECK(v % 2 == 0);
            CHECK(std::abs(v) <= 128);
        }
    }
}

TEST_CASE("spectrum energy is constant") {
    RandomStream rng(7);
    for (int rep = 0; rep < 1000; ++rep) {
        const TruthTable tt = random_table(8, rng);
        const WalshSpectrum spec = walsh_fast(tt);
        std::int64_t energy = 0;
        for (auto v : spec.values) energy += std::int64_t(v) * v;
        REQUIRE(energy == std::int64_t(1) << 16);
    }
}

TEST_CASE("flipping one table bit moves every spectrum entry by exactly 2") {
    RandomStream rng(31);
    for (int rep = 0; rep < 20; ++rep) {
        TruthTable tt = random_table(6, rng);
        const WalshSpectrum before = walsh_fast(tt);
        const std::size_t flip = rng.index(tt.size());
        tt.bits[flip] ^= 1;
        const WalshSpectrum after = walsh_fast(tt);
        for (std::size_t a = 0; a < before.values.size(); ++a)
            CHECK(std::abs(after.values[a] - before.values[a]) == 2);
    }
}

TEST_CASE("extremum helpers") {
    const TruthTable tt(2, {0, 0, 1, 1});
    const WalshSpectrum spec = walsh_fast(tt);
    CHECK(max_abs_walsh(spec) == 4);
    CHECK(max_abs_count(spec) == 1);

    const WalshSpectrum flat = walsh_fast(TruthTable(2, {0, 1, 1, 1}));
    CHECK(max_abs_walsh(flat) == 2);
    CHECK(max_abs_count(flat) == 4);
}
