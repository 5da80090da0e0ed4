#include <doctest.h>

#include "rsbf/rng.hpp"
#include "rsbf/truth_table.hpp"

using namespace rsbf;

namespace {

TruthTable from_bits(int n, const std::string& bits) {
    std::vector<std::uint8_t> v;
    for (char c : bits) v.push_back(c == '1');
    return TruthTable(n, std::move(v));
}

}  // namespace

TEST_CASE("table construction validates shape") {
    CHECK_THROWS_AS(TruthTable(0, {}), std::out_of_range);
    CHECK_THROWS_AS(TruthTable(17, {}), std::out_of_range);
    CHECK_THROWS_AS(TruthTable(2, {0, 1}), std::invalid_argument);
    const TruthTable tt = TruthTable::zeros(3);
    CHECK(tt.size() == 8);
    CHECK(tt.weight() == 0);
}

TEST_CASE("input rotation is a cyclic shift of the row index") {
    // x0 is the most significant bit, so shifting variables right rotates
    // the index right.
    CHECK(rotate_input(0b100, 3) == 0b010);
    CHECK(rotate_input(0b001, 3) == 0b100);
    CHECK(rotate_input(0b101, 3) == 0b110);
    CHECK(rotate_input(0, 3) == 0);
    CHECK(rotate_input(0b111, 3) == 0b111);

    // n applications restore every index.
    for (int n = 1; n <= 10; ++n) {
        for (std::uint32_t i = 0; i < (1u << n); i += 7) {
            std::uint32_t j = i;
            for (int k = 0; k < n; ++k) j = rotate_input(j, n);
            CHECK(j == i);
        }
    }
}

TEST_CASE("rotation symmetry detection") {
    CHECK(is_rotation_symmetric(from_bits(2, "0110")));       // x0 xor x1
    CHECK(is_rotation_symmetric(from_bits(3, "01111110")));
    CHECK_FALSE(is_rotation_symmetric(from_bits(2, "0011")));  // x0 alone
    CHECK(is_rotation_symmetric(TruthTable::zeros(4)));
}

TEST_CASE("binary format round trip") {
    const TruthTable tt = from_bits(3, "01101001");
    const std::string text = format_table(tt);
    CHECK(text == "n=3\n01101001\n");
    const TruthTable back = parse_table(text);
    CHECK(back.n == 3);
    CHECK(back.bits == tt.bits);
}

TEST_CASE("hex format packs row 0 into the high bit of the first digit") {
    const TruthTable tt = from_bits(4, "1000000000000001");
    CHECK(table_hex_digits(tt) == "8001");
    CHECK(format_table_hex(tt) == "n=4\n8001\n");
    const TruthTable back = parse_table("n=4\n8001\n");
    CHECK(back.bits == tt.bits);
    CHECK_THROWS_AS(table_hex_digits(TruthTable::zeros(1)), std::invalid_argument);
}

TEST_CASE("hex and binary agree on random tables") {
    RandomStream rng(123);
    for (int n = 2; n <= 10; ++n) {
        TruthTable tt = TruthTable::zeros(n);
        for (auto& b : tt.bits) b = rng.next_bool();
        const TruthTable via_hex = parse_table(format_table_hex(tt));
        const TruthTable via_bin = parse_table(format_table(tt));
        CHECK(via_hex.bits == tt.bits);
        CHECK(via_bin.bits == tt.bits);
    }
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_table("m=3\n01101001\n");
        FAIL("header should not parse");
    } catch (const ParseError& err) {
        CHECK(err.line == 1);
    }

    try {
        parse_table("n=3\n0110100x\n");
        FAIL("body should not parse");
    } catch (const ParseError& err) {
        CHECK(err.line == 2);
        CHECK(err.column == 8);
    }

    CHECK_THROWS_AS(parse_table("n=3\n0110\n"), ParseError);   // wrong length
    CHECK_THROWS_AS(parse_table("n=99\n01\n"), ParseError);    // n out of range
}
