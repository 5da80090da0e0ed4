#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsbf/truth_table.hpp"

namespace rsbf {

// Exponent g_n of the rotation symmetric function count 2^{g_n}:
// g_n = (1/n) * sum over t | n of phi(t) * 2^{n/t}.
int burnside_exponent(int n);

// Partition of the 2^n inputs into cyclic-shift orbits. Orbits are indexed
// ascending by representative, the minimal row index over all rotations.
struct OrbitTable {
    int n = 0;
    int orbit_count = 0;
    std::vector<std::uint32_t> representative;  // per orbit
    std::vector<std::uint32_t> orbit_size;      // per orbit
    std::vector<std::uint16_t> orbit_of;        // per input index

    static OrbitTable build(int n);

    std::size_t input_count() const { return std::size_t(1) << n; }
};

// One function value per orbit; decodes to a rotation symmetric truth table.
struct RsGenotype {
    int n = 0;
    std::vector<std::uint8_t> bits;  // length g_n, bit j = value on orbit j

    RsGenotype() = default;
    RsGenotype(int n_, std::vector<std::uint8_t> bits_) : n(n_), bits(std::move(bits_)) {}

    static RsGenotype zeros(int n) {
        return RsGenotype(n, std::vector<std::uint8_t>(burnside_exponent(n), 0));
    }

    std::size_t size() const { return bits.size(); }

    std::string to_string() const {
        std::string s;
        s.reserve(bits.size());
        for (auto b : bits) s.push_back(b ? '1' : '0');
        return s;
    }
};

struct NotRotationSymmetricError : std::runtime_error {
    int orbit;
    explicit NotRotationSymmetricError(int orbit_)
        : std::runtime_error("table is not constant on orbit " + std::to_string(orbit_)),
          orbit(orbit_) {}
};

TruthTable decode_rs(const RsGenotype& g, const OrbitTable& ot);

// Inverse of decode_rs; throws NotRotationSymmetricError naming the first
// orbit the table is not constant on.
RsGenotype encode_rs(const TruthTable& tt, const OrbitTable& ot);

// Text format: "n=<k>" header, then g_n characters {0,1} in orbit order.
std::string format_genotype(const RsGenotype& g);
RsGenotype parse_genotype(const std::string& text);

}  // namespace rsbf
