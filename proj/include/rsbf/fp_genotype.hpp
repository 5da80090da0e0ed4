#pragma once

#include <vector>

#include "rsbf/orbits.hpp"
#include "rsbf/rng.hpp"

namespace rsbf {

// Continuous genotype: `dimension` reals in [0,1], each encoding
// `decode_bits` bits of the underlying g_n-bit genotype, so
// decode_bits * dimension == g_n.
struct FpGenotype {
    int n = 0;
    int decode_bits = 1;
    std::vector<double> values;

    std::size_t dimension() const { return values.size(); }
};

// decode_bits must divide g_n; returns g_n / decode_bits.
int fp_dimension(int n, int decode_bits);

FpGenotype random_fp(int n, int decode_bits, RandomStream& rng);

// Each value v maps to floor(v / 2^-decode_bits), clamped to
// [0, 2^decode_bits - 1], written MSB-first; blocks concatenate in index
// order. Total on any input thanks to the clamp.
RsGenotype fp_decode(const FpGenotype& g);

enum class FpMutation { resample, gaussian };
enum class FpCrossover { blend, uniform };

FpGenotype fp_mutate(const FpGenotype& g, FpMutation op, RandomStream& rng);
FpGenotype fp_crossover(const FpGenotype& p1, const FpGenotype& p2, FpCrossover op,
                        RandomStream& rng);

// CSV of reals, exact round trip.
std::string format_fp_csv(const FpGenotype& g);
FpGenotype parse_fp_csv(int n, int decode_bits, const std::string& csv);

}  // namespace rsbf
