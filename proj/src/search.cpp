#include "rsbf/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "rsbf/bitstring_ops.hpp"
#include "rsbf/fp_genotype.hpp"
#include "rsbf/gp_tree.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rsbf {

const char* encoding_name(EncodingKind kind) {
    switch (kind) {
        case EncodingKind::bitstring: return "tt";
        case EncodingKind::fp: return "fp";
        case EncodingKind::gp: return "gp";
    }
    return "?";
}

const char* engine_name(EngineKind kind) {
    return kind == EngineKind::sst ? "sst" : "de";
}

const char* objective_name(Objective objective) {
    return objective == Objective::bent ? "bent" : "balanced";
}

EncodingKind parse_encoding(const std::string& name) {
    if (name == "tt") return EncodingKind::bitstring;
    if (name == "fp") return EncodingKind::fp;
    if (name == "gp") return EncodingKind::gp;
    throw std::invalid_argument("unknown encoding '" + name + "' (expected tt, fp, or gp)");
}

EngineKind parse_engine(const std::string& name) {
    if (name == "sst") return EngineKind::sst;
    if (name == "de") return EngineKind::de;
    throw std::invalid_argument("unknown engine '" + name + "' (expected sst or de)");
}

Objective parse_objective(const std::string& name) {
    if (name == "bent") return Objective::bent;
    if (name == "balanced") return Objective::balanced;
    throw std::invalid_argument("unknown objective '" + name + "' (expected bent or balanced)");
}

void RunConfig::validate() const {
    check_var_count(n);
    if (engine == EngineKind::de && encoding != EncodingKind::fp)
        throw std::invalid_argument("the de engine only runs on the fp encoding");
    if (engine == EngineKind::sst && population_size < 3)
        throw std::invalid_argument("sst needs a population of at least 3");
    if (engine == EngineKind::de && population_size < 4)
        throw std::invalid_argument("de needs a population of at least 4");
    if (budget == 0) throw std::invalid_argument("evaluation budget must be positive");
    if (mutation_probability < 0.0 || mutation_probability > 1.0)
        throw std::invalid_argument("mutation probability must lie in [0, 1]");
    if (encoding == EncodingKind::fp) fp_dimension(n, decode_bits);  // throws if it cannot divide
    if (encoding == EncodingKind::gp && max_depth < 1)
        throw std::invalid_argument("gp max depth must be at least 1");
    if (de_crossover_rate < 0.0 || de_crossover_rate > 1.0)
        throw std::invalid_argument("de crossover rate must lie in [0, 1]");
}

namespace {

// ---------------------------------------------------------------------------
// Encoding policies: each binds random initialisation, variation operators
// (picked uniformly among the registered alternatives per invocation),
// decoding to orbit bits, and serialization.

struct BitstringPolicy {
    using Genotype = RsGenotype;
    int n;

    explicit BitstringPolicy(const RunConfig& cfg) : n(cfg.n) {}

    Genotype random(int /*individual*/, RandomStream& rng) { return random_genotype(n, rng); }

    Genotype crossover(const Genotype& p1, const Genotype& p2, RandomStream& rng) {
        const auto op = rng.index(2) == 0 ? BitCrossover::one_point : BitCrossover::uniform;
        return bitstring_crossover(p1, p2, op, rng);
    }

    Genotype mutate(const Genotype& g, RandomStream& rng) {
        const auto op = rng.index(2) == 0 ? BitMutation::simple : BitMutation::shuffle;
        return bitstring_mutate(g, op, rng);
    }

    const std::uint8_t* orbit_bits(const Genotype& g) { return g.bits.data(); }

    RsGenotype to_rs(const Genotype& g) const { return g; }

    std::string serialize(const Genotype& g) const { return g.to_string(); }
};

struct FpPolicy {
    using Genotype = FpGenotype;
    int n;
    int decode_bits;
    RsGenotype scratch;

    explicit FpPolicy(const RunConfig& cfg)
        : n(cfg.n), decode_bits(cfg.decode_bits), scratch(RsGenotype::zeros(cfg.n)) {}

    Genotype random(int /*individual*/, RandomStream& rng) {
        return random_fp(n, decode_bits, rng);
    }

    Genotype crossover(const Genotype& p1, const Genotype& p2, RandomStream& rng) {
        const auto op = rng.index(2) == 0 ? FpCrossover::blend : FpCrossover::uniform;
        return fp_crossover(p1, p2, op, rng);
    }

    Genotype mutate(const Genotype& g, RandomStream& rng) {
        const auto op = rng.index(2) == 0 ? FpMutation::resample : FpMutation::gaussian;
        return fp_mutate(g, op, rng);
    }

    const std::uint8_t* orbit_bits(const Genotype& g) {
        scratch = fp_decode(g);
        return scratch.bits.data();
    }

    RsGenotype to_rs(const Genotype& g) const { return fp_decode(g); }

    std::string serialize(const Genotype& g) const { return format_fp_csv(g); }
};

struct GpPolicy {
    using Genotype = GpTree;
    int n;
    int var_count;
    int max_depth;
    RsGenotype scratch;

    explicit GpPolicy(const RunConfig& cfg)
        : n(cfg.n),
          var_count(gp_var_count(cfg.n)),
          max_depth(cfg.max_depth),
          scratch(RsGenotype::zeros(cfg.n)) {}

    // Ramped half and half: initial depths cycle 2..6 (capped by the depth
    // limit), methods alternate between grow and full.
    Genotype random(int individual, RandomStream& rng) {
        const int depth = std::min(2 + individual % 5, max_depth);
        const bool full = individual % 2 == 0;
        return random_gp_tree(var_count, max_depth, depth, full, rng);
    }

    Genotype crossover(const Genotype& p1, const Genotype& p2, RandomStream& rng) {
        static constexpr GpCrossoverOp kOps[] = {
            GpCrossoverOp::simple, GpCrossoverOp::uniform, GpCrossoverOp::size_fair,
            GpCrossoverOp::one_point, GpCrossoverOp::context_preserving,
        };
        return gp_crossover(p1, p2, kOps[rng.index(5)], rng);
    }

    Genotype mutate(const Genotype& g, RandomStream& rng) { return gp_mutate(g, rng); }

    const std::uint8_t* orbit_bits(const Genotype& g) {
        scratch = gp_decode(g, n);
        return scratch.bits.data();
    }

    RsGenotype to_rs(const Genotype& g) const { return gp_decode(g, n); }

    std::string serialize(const Genotype& g) const { return format_sexpr(g); }
};

// ---------------------------------------------------------------------------

template <typename Policy>
class BestTracker {
public:
    void consider(const typename Policy::Genotype& candidate, const FitnessValue& fitness,
                  std::uint64_t evaluation, std::vector<TrajectoryPoint>& trajectory) {
        if (have_ && !(fitness > fitness_)) return;
        have_ = true;
        genotype_ = candidate;
        fitness_ = fitness;
        trajectory.push_back(
            {evaluation, fitness.scaled, fitness.nonlinearity, fitness.balance_deficit});
    }

    const typename Policy::Genotype& genotype() const { return genotype_; }
    const FitnessValue& fitness() const { return fitness_; }

private:
    bool have_ = false;
    typename Policy::Genotype genotype_{};
    FitnessValue fitness_{};
};

template <typename Policy>
RunResult finish_run(const RunConfig& cfg, Policy& policy, const BestTracker<Policy>& best,
                     const Evaluator& eval, std::vector<TrajectoryPoint> trajectory) {
    RunResult result;
    result.config = cfg;
    result.best_genotype = policy.serialize(best.genotype());
    result.best_table = decode_rs(policy.to_rs(best.genotype()), eval.orbits());
    result.best_fitness = best.fitness();
    result.evaluations = eval.evaluations();
    result.trajectory = std::move(trajectory);
    return result;
}

// Steady state tournament: draw three distinct individuals, discard the
// worst (ties broken uniformly), cross the two survivors, mutate the child
// with the configured probability, and write it into the vacated slot.
template <typename Policy>
RunResult run_sst(const RunConfig& cfg) {
    Policy policy(cfg);
    RandomStream rng(cfg.seed);
    Evaluator eval(cfg.n, cfg.objective);

    std::vector<typename Policy::Genotype> population;
    std::vector<FitnessValue> fitness;
    population.reserve(cfg.population_size);
    fitness.reserve(cfg.population_size);

    BestTracker<Policy> best;
    std::vector<TrajectoryPoint> trajectory;

    for (int i = 0; i < cfg.population_size && eval.evaluations() < cfg.budget; ++i) {
        population.push_back(policy.random(i, rng));
        fitness.push_back(eval.eval_rs_bits(policy.orbit_bits(population.back())));
        best.consider(population.back(), fitness.back(), eval.evaluations(), trajectory);
    }

    const std::size_t pop = population.size();
    while (eval.evaluations() < cfg.budget && pop >= 3) {
        std::size_t picks[3];
        picks[0] = rng.index(pop);
        do picks[1] = rng.index(pop); while (picks[1] == picks[0]);
        do picks[2] = rng.index(pop); while (picks[2] == picks[0] || picks[2] == picks[1]);

        const FitnessValue worst_fitness =
            std::min({fitness[picks[0]], fitness[picks[1]], fitness[picks[2]]});
        std::size_t tied[3];
        std::size_t tied_count = 0;
        for (std::size_t pick : picks)
            if (fitness[pick] == worst_fitness) tied[tied_count++] = pick;
        const std::size_t eliminated = tied[rng.index(tied_count)];

        std::size_t parents[2];
        std::size_t parent_count = 0;
        for (std::size_t pick : picks)
            if (pick != eliminated) parents[parent_count++] = pick;

        auto child = policy.crossover(population[parents[0]], population[parents[1]], rng);
        if (rng.next_real() < cfg.mutation_probability) child = policy.mutate(child, rng);

        const FitnessValue child_fitness = eval.eval_rs_bits(policy.orbit_bits(child));
        population[eliminated] = std::move(child);
        fitness[eliminated] = child_fitness;
        best.consider(population[eliminated], child_fitness, eval.evaluations(), trajectory);
    }

    return finish_run(cfg, policy, best, eval, std::move(trajectory));
}

// Differential evolution, rand/1/bin with greedy replacement.  Continuous
// genotypes only.
RunResult run_de(const RunConfig& cfg) {
    FpPolicy policy(cfg);
    RandomStream rng(cfg.seed);
    Evaluator eval(cfg.n, cfg.objective);
    const std::size_t dim = static_cast<std::size_t>(fp_dimension(cfg.n, cfg.decode_bits));

    std::vector<FpGenotype> population;
    std::vector<FitnessValue> fitness;
    population.reserve(cfg.population_size);
    fitness.reserve(cfg.population_size);

    BestTracker<FpPolicy> best;
    std::vector<TrajectoryPoint> trajectory;

    for (int i = 0; i < cfg.population_size && eval.evaluations() < cfg.budget; ++i) {
        population.push_back(policy.random(i, rng));
        fitness.push_back(eval.eval_rs_bits(policy.orbit_bits(population.back())));
        best.consider(population.back(), fitness.back(), eval.evaluations(), trajectory);
    }

    const std::size_t pop = population.size();
    FpGenotype trial{cfg.n, cfg.decode_bits, std::vector<double>(dim, 0.0)};
    while (eval.evaluations() < cfg.budget && pop >= 4) {
        for (std::size_t target = 0; target < pop && eval.evaluations() < cfg.budget; ++target) {
            std::size_t a, b, c;
            do a = rng.index(pop); while (a == target);
            do b = rng.index(pop); while (b == target || b == a);
            do c = rng.index(pop); while (c == target || c == a || c == b);

            const std::size_t forced = rng.index(dim);
            for (std::size_t j = 0; j < dim; ++j) {
                if (j == forced || rng.next_real() < cfg.de_crossover_rate) {
                    const double mutant = population[a].values[j] +
                                          cfg.de_weight *
                                              (population[b].values[j] - population[c].values[j]);
                    trial.values[j] = std::clamp(mutant, 0.0, 1.0);
                } else {
                    trial.values[j] = population[target].values[j];
                }
            }

            const FitnessValue trial_fitness = eval.eval_rs_bits(policy.orbit_bits(trial));
            if (trial_fitness >= fitness[target]) {
                population[target] = trial;
                fitness[target] = trial_fitness;
                best.consider(population[target], trial_fitness, eval.evaluations(), trajectory);
            }
        }
    }

    return finish_run(cfg, policy, best, eval, std::move(trajectory));
}

}  // namespace

RunResult run_single(const RunConfig& config) {
    config.validate();
    if (config.engine == EngineKind::de) return run_de(config);
    switch (config.encoding) {
        case EncodingKind::bitstring: return run_sst<BitstringPolicy>(config);
        case EncodingKind::fp: return run_sst<FpPolicy>(config);
        case EncodingKind::gp: return run_sst<GpPolicy>(config);
    }
    throw std::logic_error("unreachable encoding");
}

BatchResult run_batch(const RunConfig& config, int runs, int jobs) {
    if (runs < 1) throw std::invalid_argument("batch needs at least one run");
    config.validate();

    BatchResult batch;
    batch.runs.resize(runs);

#ifdef _OPENMP
    if (jobs < 1) jobs = omp_get_max_threads();
#else
    jobs = 1;
#endif

    // Runs only differ in their seed, so any schedule yields the same
    // result vector: slot r always holds the run seeded config.seed + r.
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (int r = 0; r < runs; ++r) {
        RunConfig local = config;
        local.seed = config.seed + static_cast<std::uint64_t>(r);
        batch.runs[r] = run_single(local);
    }

    std::vector<double> fitness_values, nl_values;
    fitness_values.reserve(runs);
    nl_values.reserve(runs);
    for (const RunResult& run : batch.runs) {
        fitness_values.push_back(run.best_fitness.scalar());
        nl_values.push_back(run.best_fitness.nonlinearity);
    }
    batch.fitness_summary = five_number_summary(std::move(fitness_values));
    batch.nonlinearity_summary = five_number_summary(std::move(nl_values));
    return batch;
}

}  // namespace rsbf
