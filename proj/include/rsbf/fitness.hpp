#pragma once

#include <cstdint>
#include <vector>

#include "rsbf/orbits.hpp"
#include "rsbf/properties.hpp"
#include "rsbf/truth_table.hpp"

namespace rsbf {

enum class Objective { bent, balanced };

// Fitness kept as an exact scaled integer so comparisons and ties are never
// at the mercy of floating-point rounding.  The scale is 2^n:
//
//   bent      : nl * 2^n + (2^n - count of spectrum entries at max |W|)
//   balanced  : -deficit * 2^n, except a perfectly balanced table scores
//               the bent fitness of the same table (always positive, so the
//               two regimes cannot collide)
//
// scalar() recovers the conventional real-valued reading.
struct FitnessValue {
    int n = 0;
    std::int64_t scaled = 0;
    int nonlinearity = 0;
    int balance_deficit = 0;
    int max_count = 0;

    double scalar() const { return static_cast<double>(scaled) / static_cast<double>(std::size_t(1) << n); }

    friend bool operator==(const FitnessValue& a, const FitnessValue& b) {
        return a.scaled == b.scaled;
    }
    friend bool operator<(const FitnessValue& a, const FitnessValue& b) {
        return a.scaled < b.scaled;
    }
    friend bool operator>(const FitnessValue& a, const FitnessValue& b) { return b < a; }
    friend bool operator<=(const FitnessValue& a, const FitnessValue& b) { return !(b < a); }
    friend bool operator>=(const FitnessValue& a, const FitnessValue& b) { return !(a < b); }
};

FitnessValue fitness_bent(const TruthTable& tt);
FitnessValue fitness_balanced(const TruthTable& tt);
FitnessValue evaluate_objective(const TruthTable& tt, Objective objective);

// Scores rotation symmetric genotypes without materialising a TruthTable:
// expands orbit bits straight into the +/-1 signal buffer, runs the fast
// transform in place, and folds the spectrum in one pass.  The work buffer
// is reused across calls, which matters when a search loop burns through
// hundreds of thousands of evaluations.
class Evaluator {
public:
    Evaluator(int n, Objective objective);

    const OrbitTable& orbits() const { return orbits_; }
    Objective objective() const { return objective_; }
    int n() const { return n_; }
    std::uint64_t evaluations() const { return evaluations_; }

    FitnessValue eval_rs_bits(const std::uint8_t* orbit_bits);
    FitnessValue eval_genotype(const RsGenotype& g);

private:
    int n_;
    Objective objective_;
    OrbitTable orbits_;
    std::vector<std::int32_t> work_;
    std::uint64_t evaluations_ = 0;
};

}  // namespace rsbf
