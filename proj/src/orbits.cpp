#include "rsbf/orbits.hpp"

#include <cctype>
#include <sstream>

namespace rsbf {

namespace {

int euler_phi(int t) {
    int result = t;
    for (int p = 2; p * p <= t; ++p) {
        if (t % p == 0) {
            while (t % p == 0) t /= p;
            result -= result / p;
        }
    }
    if (t > 1) result -= result / t;
    return result;
}

}  // namespace

int burnside_exponent(int n) {
    check_var_count(n);
    std::uint64_t sum = 0;
    for (int t = 1; t <= n; ++t)
        if (n % t == 0)
            sum += std::uint64_t(euler_phi(t)) << (n / t);
    // Burnside guarantees exact divisibility.
    return static_cast<int>(sum / std::uint64_t(n));
}

OrbitTable OrbitTable::build(int n) {
    check_var_count(n);
    OrbitTable ot;
    ot.n = n;
    const std::uint32_t size = std::uint32_t(1) << n;
    constexpr std::uint16_t kUnassigned = 0xffff;
    ot.orbit_of.assign(size, kUnassigned);

    // Ascending scan: the first index seen in each rotation class is its
    // minimum, so orbits come out sorted by representative.
    for (std::uint32_t i = 0; i < size; ++i) {
        if (ot.orbit_of[i] != kUnassigned) continue;
        const auto orbit = static_cast<std::uint16_t>(ot.representative.size());
        ot.representative.push_back(i);
        std::uint32_t members = 0;
        std::uint32_t j = i;
        do {
            ot.orbit_of[j] = orbit;
            ++members;
            j = rotate_input(j, n);
        } while (j != i);
        ot.orbit_size.push_back(members);
    }
    ot.orbit_count = static_cast<int>(ot.representative.size());
    return ot;
}

TruthTable decode_rs(const RsGenotype& g, const OrbitTable& ot) {
    if (g.n != ot.n)
        throw std::invalid_argument("genotype and orbit table disagree on n");
    if (g.bits.size() != static_cast<std::size_t>(ot.orbit_count))
        throw std::invalid_argument("genotype length must equal the orbit count");
    TruthTable tt = TruthTable::zeros(ot.n);
    const std::size_t size = tt.size();
    for (std::size_t i = 0; i < size; ++i)
        tt.bits[i] = g.bits[ot.orbit_of[i]];
    return tt;
}

RsGenotype encode_rs(const TruthTable& tt, const OrbitTable& ot) {
    if (tt.n != ot.n)
        throw std::invalid_argument("table and orbit table disagree on n");
    RsGenotype g = RsGenotype::zeros(ot.n);
    for (int orbit = 0; orbit < ot.orbit_count; ++orbit)
        g.bits[orbit] = tt.bits[ot.representative[orbit]];
    // Verify constancy orbit by orbit, lowest violating orbit first.
    for (std::size_t i = 0; i < tt.size(); ++i)
        if (tt.bits[i] != g.bits[ot.orbit_of[i]]) {
            int first = ot.orbit_count;
            for (std::size_t j = i; j < tt.size(); ++j)
                if (tt.bits[j] != g.bits[ot.orbit_of[j]] && ot.orbit_of[j] < first)
                    first = ot.orbit_of[j];
            throw NotRotationSymmetricError(first);
        }
    return g;
}

std::string format_genotype(const RsGenotype& g) {
    return "n=" + std::to_string(g.n) + "\n" + g.to_string() + "\n";
}

RsGenotype parse_genotype(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    std::getline(in, header);
    if (!header.empty() && header.back() == '\r') header.pop_back();
    if (header.rfind("n=", 0) != 0)
        throw ParseError("expected header line \"n=<k>\"", 1, 1);
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(header.substr(2), &used);
        if (used != header.size() - 2) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw ParseError("expected integer after \"n=\"", 1, 3);
    }
    check_var_count(n);

    std::string body;
    std::getline(in, body);
    if (!body.empty() && body.back() == '\r') body.pop_back();
    const auto expected = static_cast<std::size_t>(burnside_exponent(n));
    if (body.size() != expected)
        throw ParseError("genotype needs " + std::to_string(expected) + " bits, got " +
                             std::to_string(body.size()),
                         2, 1);
    RsGenotype g = RsGenotype::zeros(n);
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '1') g.bits[i] = 1;
        else if (body[i] != '0') throw ParseError("expected '0' or '1'", 2, int(i) + 1);
    }
    return g;
}

}  // namespace rsbf
