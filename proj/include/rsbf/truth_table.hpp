#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsbf {

constexpr int kMinVars = 1;
constexpr int kMaxVars = 16;

inline void check_var_count(int n) {
    if (n < kMinVars || n > kMaxVars)
        throw std::out_of_range("variable count must be in [1, 16], got " + std::to_string(n));
}

// Truth table of an n-variable Boolean function. bits[i] = f(x) where i is
// the n-bit row index with x0 as its most significant bit, rows ordered
// lexicographically: index 0 is the all-zeros input, 2^n - 1 the all-ones.
struct TruthTable {
    int n = 0;
    std::vector<std::uint8_t> bits;  // one 0/1 value per row

    TruthTable() = default;
    TruthTable(int n_, std::vector<std::uint8_t> bits_) : n(n_), bits(std::move(bits_)) {
        check_var_count(n);
        if (bits.size() != size())
            throw std::invalid_argument("truth table length must be 2^n");
    }

    static TruthTable zeros(int n) {
        check_var_count(n);
        return TruthTable(n, std::vector<std::uint8_t>(std::size_t(1) << n, 0));
    }

    std::size_t size() const { return std::size_t(1) << n; }

    std::size_t weight() const {
        std::size_t w = 0;
        for (auto b : bits) w += b;
        return w;
    }
};

// Index image of the primitive cyclic shift
// (x0, ..., x_{n-1}) -> (x_{n-1}, x0, ..., x_{n-2}).
// With x0 as the MSB of the row index this is a rotate-right by one bit.
inline std::uint32_t rotate_input(std::uint32_t index, int n) {
    return ((index >> 1) | ((index & 1u) << (n - 1))) & ((std::uint32_t(1) << n) - 1);
}

bool is_rotation_symmetric(const TruthTable& tt);

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(std::string msg, int line_, int column_)
        : std::runtime_error(std::move(msg)), line(line_), column(column_) {}
};

// Text formats share the header line "n=<k>". The body line is either the
// 2^k-character 0/1 row sequence or, for k >= 2, 2^k/4 hex digits where the
// first digit packs rows 0..3 with row 0 in the high bit of the nibble.
std::string format_table(const TruthTable& tt);
std::string format_table_hex(const TruthTable& tt);
std::string table_hex_digits(const TruthTable& tt);
TruthTable table_from_hex_digits(int n, const std::string& digits);
TruthTable parse_table(const std::string& text);

}  // namespace rsbf
