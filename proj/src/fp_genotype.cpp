#include "rsbf/fp_genotype.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace rsbf {

namespace {
constexpr double kGaussSigma = 0.1;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }
}  // namespace

int fp_dimension(int n, int decode_bits) {
    const int g_n = burnside_exponent(n);
    if (decode_bits < 1 || g_n % decode_bits != 0)
        throw std::invalid_argument("decode must divide the genotype size " + std::to_string(g_n));
    return g_n / decode_bits;
}

FpGenotype random_fp(int n, int decode_bits, RandomStream& rng) {
    FpGenotype g;
    g.n = n;
    g.decode_bits = decode_bits;
    g.values.resize(fp_dimension(n, decode_bits));
    for (auto& v : g.values) v = rng.next_real();
    return g;
}

RsGenotype fp_decode(const FpGenotype& g) {
    const int decode = g.decode_bits;
    RsGenotype out = RsGenotype::zeros(g.n);
    const std::uint64_t bucket_count = std::uint64_t(1) << decode;
    std::size_t pos = 0;
    for (double v : g.values) {
        // floor(v / 2^-decode); the divisor is an exact power of two.
        double scaled = std::floor(std::ldexp(v, decode));
        if (scaled < 0.0) scaled = 0.0;
        std::uint64_t value = static_cast<std::uint64_t>(scaled);
        if (value >= bucket_count) value = bucket_count - 1;
        for (int b = decode - 1; b >= 0; --b)
            out.bits[pos++] = static_cast<std::uint8_t>((value >> b) & 1);
    }
    return out;
}

FpGenotype fp_mutate(const FpGenotype& g, FpMutation op, RandomStream& rng) {
    FpGenotype child = g;
    const std::size_t i = rng.index(child.values.size());
    switch (op) {
        case FpMutation::resample:
            child.values[i] = rng.next_real();
            break;
        case FpMutation::gaussian:
            child.values[i] = clamp01(child.values[i] + kGaussSigma * rng.next_gauss());
            break;
    }
    return child;
}

FpGenotype fp_crossover(const FpGenotype& p1, const FpGenotype& p2, FpCrossover op,
                        RandomStream& rng) {
    if (p1.n != p2.n || p1.decode_bits != p2.decode_bits || p1.dimension() != p2.dimension())
        throw std::invalid_argument("crossover parents must have equal dimension");
    FpGenotype child = p1;
    switch (op) {
        case FpCrossover::blend: {
            const double alpha = rng.next_real();
            for (std::size_t i = 0; i < child.values.size(); ++i)
                child.values[i] = clamp01(alpha * p1.values[i] + (1.0 - alpha) * p2.values[i]);
            break;
        }
        case FpCrossover::uniform:
            for (std::size_t i = 0; i < child.values.size(); ++i)
                if (rng.next_bool()) child.values[i] = p2.values[i];
            break;
    }
    return child;
}

std::string format_fp_csv(const FpGenotype& g) {
    std::string out;
    char buf[32];
    for (std::size_t i = 0; i < g.values.size(); ++i) {
        if (i) out.push_back(',');
        const auto res = std::to_chars(buf, buf + sizeof buf, g.values[i]);
        out.append(buf, res.ptr);
    }
    return out;
}

FpGenotype parse_fp_csv(int n, int decode_bits, const std::string& csv) {
    FpGenotype g;
    g.n = n;
    g.decode_bits = decode_bits;
    const std::size_t expected = fp_dimension(n, decode_bits);
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        double v = 0.0;
        const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
        if (res.ec != std::errc() || res.ptr != item.data() + item.size())
            throw std::invalid_argument("invalid real value '" + item + "'");
        g.values.push_back(v);
    }
    if (g.values.size() != expected)
        throw std::invalid_argument("expected " + std::to_string(expected) + " values, got " +
                                    std::to_string(g.values.size()));
    return g;
}

}  // namespace rsbf
