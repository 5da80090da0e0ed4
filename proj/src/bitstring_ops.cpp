#include "rsbf/bitstring_ops.hpp"

#include <algorithm>
#include <utility>

namespace rsbf {

RsGenotype flip_bit(const RsGenotype& g, std::size_t index) {
    RsGenotype child = g;
    child.bits[index] ^= 1;
    return child;
}

RsGenotype shuffle_range(const RsGenotype& g, std::size_t lo, std::size_t hi, RandomStream& rng) {
    RsGenotype child = g;
    // Fisher-Yates over [lo, hi].
    for (std::size_t i = hi; i > lo; --i) {
        const std::size_t j = lo + rng.index(i - lo + 1);
        std::swap(child.bits[i], child.bits[j]);
    }
    return child;
}

RsGenotype one_point_cross(const RsGenotype& p1, const RsGenotype& p2, std::size_t breakpoint) {
    RsGenotype child = p1;
    for (std::size_t i = breakpoint; i < child.bits.size(); ++i)
        child.bits[i] = p2.bits[i];
    return child;
}

RsGenotype uniform_cross(const RsGenotype& p1, const RsGenotype& p2, RandomStream& rng) {
    RsGenotype child = p1;
    for (std::size_t i = 0; i < child.bits.size(); ++i)
        if (rng.next_bool()) child.bits[i] = p2.bits[i];
    return child;
}

RsGenotype bitstring_mutate(const RsGenotype& g, BitMutation op, RandomStream& rng) {
    const std::size_t length = g.bits.size();
    switch (op) {
        case BitMutation::simple:
            return flip_bit(g, rng.index(length));
        case BitMutation::shuffle: {
            std::size_t lo = rng.index(length);
            std::size_t hi = rng.index(length);
            if (lo > hi) std::swap(lo, hi);
            return shuffle_range(g, lo, hi, rng);
        }
    }
    return g;
}

RsGenotype bitstring_crossover(const RsGenotype& p1, const RsGenotype& p2, BitCrossover op,
                               RandomStream& rng) {
    if (p1.n != p2.n || p1.bits.size() != p2.bits.size())
        throw std::invalid_argument("crossover parents must have equal length");
    const std::size_t length = p1.bits.size();
    switch (op) {
        case BitCrossover::one_point:
            // Interior breakpoint; every g_n is at least 2.
            return one_point_cross(p1, p2, 1 + rng.index(length - 1));
        case BitCrossover::uniform:
            return uniform_cross(p1, p2, rng);
    }
    return p1;
}

RsGenotype random_genotype(int n, RandomStream& rng) {
    RsGenotype g = RsGenotype::zeros(n);
    for (auto& b : g.bits) b = rng.next_bool() ? 1 : 0;
    return g;
}

}  // namespace rsbf
