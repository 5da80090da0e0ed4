#include "rsbf/fitness.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "rsbf/walsh.hpp"

namespace rsbf {

namespace {

// One pass over the spectrum: max |W|, how many entries attain it, and W(0).
struct SpectrumFold {
    std::int32_t max_abs = 0;
    int max_count = 0;
    std::int32_t at_zero = 0;
};

SpectrumFold fold_spectrum(const std::int32_t* values, std::size_t size) {
    SpectrumFold fold;
    fold.at_zero = values[0];
    for (std::size_t i = 0; i < size; ++i) {
        const std::int32_t mag = std::abs(values[i]);
        if (mag > fold.max_abs) {
            fold.max_abs = mag;
            fold.max_count = 1;
        } else if (mag == fold.max_abs) {
            ++fold.max_count;
        }
    }
    return fold;
}

FitnessValue from_fold(int n, Objective objective, const SpectrumFold& fold) {
    const std::int64_t size = std::int64_t(1) << n;
    FitnessValue value;
    value.n = n;
    value.nonlinearity = static_cast<int>((size - fold.max_abs) / 2);
    value.balance_deficit = static_cast<int>(std::abs(fold.at_zero) / 2);
    value.max_count = fold.max_count;
    if (objective == Objective::balanced && value.balance_deficit != 0)
        value.scaled = -std::int64_t(value.balance_deficit) * size;
    else
        value.scaled = std::int64_t(value.nonlinearity) * size + (size - fold.max_count);
    return value;
}

}  // namespace

FitnessValue fitness_bent(const TruthTable& tt) {
    const WalshSpectrum spectrum = walsh_transform(tt, WalshMode::fast);
    return from_fold(tt.n, Objective::bent, fold_spectrum(spectrum.values.data(), spectrum.values.size()));
}

FitnessValue fitness_balanced(const TruthTable& tt) {
    const WalshSpectrum spectrum = walsh_transform(tt, WalshMode::fast);
    return from_fold(tt.n, Objective::balanced,
                     fold_spectrum(spectrum.values.data(), spectrum.values.size()));
}

FitnessValue evaluate_objective(const TruthTable& tt, Objective objective) {
    return objective == Objective::bent ? fitness_bent(tt) : fitness_balanced(tt);
}

Evaluator::Evaluator(int n, Objective objective)
    : n_(n), objective_(objective), orbits_(OrbitTable::build(n)) {
    work_.resize(std::size_t(1) << n_);
}

FitnessValue Evaluator::eval_rs_bits(const std::uint8_t* orbit_bits) {
    const std::size_t size = work_.size();
    const std::uint16_t* orbit_of = orbits_.orbit_of.data();
    for (std::size_t i = 0; i < size; ++i)
        work_[i] = 1 - 2 * static_cast<std::int32_t>(orbit_bits[orbit_of[i]]);
    fwht_inplace(work_.data(), size);
    ++evaluations_;
    return from_fold(n_, objective_, fold_spectrum(work_.data(), size));
}

FitnessValue Evaluator::eval_genotype(const RsGenotype& g) {
    if (g.n != n_) throw std::invalid_argument("genotype variable count differs from evaluator");
    return eval_rs_bits(g.bits.data());
}

}  // namespace rsbf
