#include <doctest.h>

#include <algorithm>

#include "rsbf/oracle.hpp"
#include "rsbf/search.hpp"

using namespace rsbf;

namespace {

RunConfig small_config(EncodingKind encoding, Objective objective) {
    RunConfig cfg;
    cfg.n = 5;
    cfg.encoding = encoding;
    cfg.objective = objective;
    cfg.population_size = 40;
    cfg.budget = 3000;
    cfg.seed = 97;
    return cfg;
}

}  // namespace

TEST_CASE("name round trips and validation") {
    CHECK(parse_encoding("tt") == EncodingKind::bitstring);
    CHECK(parse_encoding("fp") == EncodingKind::fp);
    CHECK(parse_encoding("gp") == EncodingKind::gp);
    CHECK_THROWS_AS(parse_encoding("nope"), std::invalid_argument);
    CHECK(parse_engine("de") == EngineKind::de);
    CHECK(parse_objective("balanced") == Objective::balanced);
    CHECK(std::string(encoding_name(EncodingKind::gp)) == "gp");

    RunConfig cfg;
    cfg.engine = EngineKind::de;
    cfg.encoding = EncodingKind::gp;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.encoding = EncodingKind::fp;
    CHECK_NOTHROW(cfg.validate());
    cfg.budget = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("runs consume exactly the budget") {
    for (auto encoding : {EncodingKind::bitstring, EncodingKind::fp, EncodingKind::gp}) {
        RunConfig cfg = small_config(encoding, Objective::bent);
        cfg.budget = 777;  // not a multiple of anything relevant
        const RunResult result = run_single(cfg);
        CHECK(result.evaluations == 777);
    }

    RunConfig de = small_config(EncodingKind::fp, Objective::bent);
    de.engine = EngineKind::de;
    de.budget = 505;
    CHECK(run_single(de).evaluations == 505);

    // A budget below the population size still stops on time.
    RunConfig tiny = small_config(EncodingKind::bitstring, Objective::bent);
    tiny.budget = 7;
    CHECK(run_single(tiny).evaluations == 7);
}

TEST_CASE("equal seeds reproduce runs, different seeds diverge") {
    for (auto encoding : {EncodingKind::bitstring, EncodingKind::fp, EncodingKind::gp}) {
        const RunConfig cfg = small_config(encoding, Objective::balanced);
        const RunResult a = run_single(cfg);
        const RunResult b = run_single(cfg);
        CHECK(a.best_genotype == b.best_genotype);
        CHECK(a.best_fitness.scaled == b.best_fitness.scaled);
        CHECK(a.trajectory.size() == b.trajectory.size());

        RunConfig other = cfg;
        other.seed = cfg.seed + 1;
        const RunResult c = run_single(other);
        // Same settings, fresh randomness: the search path differs.
        CHECK((a.best_genotype != c.best_genotype ||
               a.trajectory.size() != c.trajectory.size()));
    }
}

TEST_CASE("trajectories are strictly improving and end at the best") {
    for (auto engine : {EngineKind::sst, EngineKind::de}) {
        RunConfig cfg = small_config(EncodingKind::fp, Objective::balanced);
        cfg.engine = engine;
        const RunResult result = run_single(cfg);
        REQUIRE(!result.trajectory.empty());
        for (std::size_t i = 1; i < result.trajectory.size(); ++i) {
            CHECK(result.trajectory[i].fitness_scaled > result.trajectory[i - 1].fitness_scaled);
            CHECK(result.trajectory[i].evaluation > result.trajectory[i - 1].evaluation);
        }
        CHECK(result.trajectory.back().fitness_scaled == result.best_fitness.scaled);
        CHECK(result.trajectory.front().evaluation >= 1);
        CHECK(result.trajectory.back().evaluation <= result.evaluations);
    }
}

TEST_CASE("reported best matches its own truth table") {
    for (auto objective : {Objective::bent, Objective::balanced}) {
        const RunConfig cfg = small_config(EncodingKind::bitstring, objective);
        const RunResult result = run_single(cfg);
        CHECK(is_rotation_symmetric(result.best_table));
        const FitnessValue rescored = evaluate_objective(result.best_table, objective);
        CHECK(rescored.scaled == result.best_fitness.scaled);
    }
}

TEST_CASE("search attains the exhaustive optimum on a small class") {
    // n=4 has 64 functions; a few thousand evaluations find the best.
    const ExhaustReport truth = exhaust_rs(4, 1u << 20);
    RunConfig cfg;
    cfg.n = 4;
    cfg.population_size = 30;
    cfg.budget = 5000;
    cfg.seed = 3;
    const RunResult result = run_single(cfg);
    CHECK(result.best_fitness.nonlinearity == truth.best_nonlinearity);

    cfg.objective = Objective::balanced;
    const RunResult balanced = run_single(cfg);
    CHECK(balanced.best_fitness.balance_deficit == 0);
    CHECK(balanced.best_fitness.nonlinearity == truth.best_balanced_nonlinearity);
}

TEST_CASE("search never beats the exhaustive optimum") {
    const ExhaustReport truth = exhaust_rs(5, 1u << 20);
    for (auto encoding : {EncodingKind::bitstring, EncodingKind::fp, EncodingKind::gp}) {
        const RunResult result = run_single(small_config(encoding, Objective::bent));
        CHECK(result.best_fitness.nonlinearity <= truth.best_nonlinearity);

        const RunResult balanced = run_single(small_config(encoding, Objective::balanced));
        if (balanced.best_fitness.balance_deficit == 0)
            CHECK(balanced.best_fitness.nonlinearity <= truth.best_balanced_nonlinearity);
    }
}

TEST_CASE("batches map seeds to slots deterministically") {
    RunConfig cfg = small_config(EncodingKind::bitstring, Objective::bent);
    cfg.budget = 1500;
    const BatchResult batch = run_batch(cfg, 5, 2);
    REQUIRE(batch.runs.size() == 5);
    for (int r = 0; r < 5; ++r) {
        CHECK(batch.runs[r].config.seed == cfg.seed + r);
        RunConfig single = cfg;
        single.seed = cfg.seed + r;
        CHECK(run_single(single).best_fitness.scaled == batch.runs[r].best_fitness.scaled);
    }

    // Thread count cannot change the outcome.
    const BatchResult serial = run_batch(cfg, 5, 1);
    for (int r = 0; r < 5; ++r)
        CHECK(serial.runs[r].best_genotype == batch.runs[r].best_genotype);

    CHECK(batch.nonlinearity_summary.min <= batch.nonlinearity_summary.median);
    CHECK(batch.nonlinearity_summary.median <= batch.nonlinearity_summary.max);
    double best_scalar = batch.runs[0].best_fitness.scalar();
    for (const RunResult& run : batch.runs)
        best_scalar = std::max(best_scalar, run.best_fitness.scalar());
    CHECK(batch.fitness_summary.max == doctest::Approx(best_scalar));
}
