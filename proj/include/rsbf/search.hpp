#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsbf/fitness.hpp"
#include "rsbf/stats.hpp"
#include "rsbf/truth_table.hpp"

namespace rsbf {

enum class EncodingKind { bitstring, fp, gp };
enum class EngineKind { sst, de };

const char* encoding_name(EncodingKind kind);
const char* engine_name(EngineKind kind);
const char* objective_name(Objective objective);

EncodingKind parse_encoding(const std::string& name);  // "tt" | "fp" | "gp"
EngineKind parse_engine(const std::string& name);      // "sst" | "de"
Objective parse_objective(const std::string& name);    // "bent" | "balanced"

struct RunConfig {
    int n = 8;
    EncodingKind encoding = EncodingKind::bitstring;
    EngineKind engine = EngineKind::sst;
    Objective objective = Objective::bent;
    int population_size = 500;
    std::uint64_t budget = 1000000;
    double mutation_probability = 0.5;
    std::uint64_t seed = 1;
    int decode_bits = 1;   // fp encoding
    int max_depth = 12;    // gp encoding
    double de_weight = 0.5;
    double de_crossover_rate = 0.9;

    // Throws std::invalid_argument on a combination the engines cannot run,
    // including the unsupported de+gp pairing.
    void validate() const;
};

// One point per strict improvement of the best-so-far fitness.
struct TrajectoryPoint {
    std::uint64_t evaluation = 0;  // 1-based count when the improvement landed
    std::int64_t fitness_scaled = 0;
    int nonlinearity = 0;
    int balance_deficit = 0;
};

struct RunResult {
    RunConfig config;
    std::string best_genotype;  // serialized in the encoding's own format
    TruthTable best_table;
    FitnessValue best_fitness;
    std::uint64_t evaluations = 0;
    std::vector<TrajectoryPoint> trajectory;
};

RunResult run_single(const RunConfig& config);

// `runs` independent runs seeded config.seed, config.seed + 1, ...  Runs are
// distributed over `jobs` threads; results land in seed order either way.
struct BatchResult {
    std::vector<RunResult> runs;
    FiveNum fitness_summary;        // over best scalar fitness per run
    FiveNum nonlinearity_summary;   // over best nonlinearity per run
};

BatchResult run_batch(const RunConfig& config, int runs, int jobs);

}  // namespace rsbf
