#pragma once

#include "rsbf/orbits.hpp"
#include "rsbf/rng.hpp"

namespace rsbf {

enum class BitMutation { simple, shuffle };
enum class BitCrossover { one_point, uniform };

// Deterministic primitives, exposed so tests can pin the random choices.
RsGenotype flip_bit(const RsGenotype& g, std::size_t index);
RsGenotype shuffle_range(const RsGenotype& g, std::size_t lo, std::size_t hi, RandomStream& rng);
RsGenotype one_point_cross(const RsGenotype& p1, const RsGenotype& p2, std::size_t breakpoint);
RsGenotype uniform_cross(const RsGenotype& p1, const RsGenotype& p2, RandomStream& rng);

RsGenotype bitstring_mutate(const RsGenotype& g, BitMutation op, RandomStream& rng);
RsGenotype bitstring_crossover(const RsGenotype& p1, const RsGenotype& p2, BitCrossover op,
                               RandomStream& rng);

RsGenotype random_genotype(int n, RandomStream& rng);

}  // namespace rsbf
