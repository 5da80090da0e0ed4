// Command line front end: evolve rotation symmetric Boolean functions,
// analyze tables or genotypes, exhaust small search spaces, dump orbit
// tables, and summarize saved run records.
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rsbf/oracle.hpp"
#include "rsbf/properties.hpp"
#include "rsbf/result_io.hpp"
#include "rsbf/search.hpp"

namespace {

using namespace rsbf;

struct EvolveArgs {
    int n = 8;
    std::string encoding = "tt";
    std::string engine = "sst";
    std::string objective = "bent";
    int runs = 1;
    std::uint64_t seed = 1;
    int population = 500;
    std::uint64_t budget = 1000000;
    double pmut = 0.5;
    int decode = 1;
    int max_depth = 12;
    std::string out = "results";
    int jobs = 0;
};

RunConfig to_config(const EvolveArgs& args) {
    RunConfig cfg;
    cfg.n = args.n;
    cfg.encoding = parse_encoding(args.encoding);
    cfg.engine = parse_engine(args.engine);
    cfg.objective = parse_objective(args.objective);
    cfg.population_size = args.population;
    cfg.budget = args.budget;
    cfg.mutation_probability = args.pmut;
    cfg.seed = args.seed;
    cfg.decode_bits = args.decode;
    cfg.max_depth = args.max_depth;
    return cfg;
}

int cmd_evolve(const EvolveArgs& args) {
    const RunConfig cfg = to_config(args);
    cfg.validate();

    const BatchResult batch = run_batch(cfg, args.runs, args.jobs);

    for (const RunResult& run : batch.runs)
        atomic_write_file(default_run_path(args.out, run.config), run_result_to_json(run));
    atomic_write_file(default_summary_path(args.out, cfg), batch_summary_csv(cfg, batch));

    std::cout << batch_summary_csv(cfg, batch);
    const RunResult* best = &batch.runs.front();
    for (const RunResult& run : batch.runs)
        if (run.best_fitness > best->best_fitness) best = &run;
    std::cout << "best: seed " << best->config.seed << ", nonlinearity "
              << best->best_fitness.nonlinearity << ", balance deficit "
              << best->best_fitness.balance_deficit << "\n";
    std::cout << "runs written under " << args.out << "\n";
    return 0;
}

struct AnalyzeInput {
    TruthTable table;
    std::string genotype;  // set when the input was a genotype
};

// Body interpretations tried in order under "auto": full 0/1 table, hex
// table, orbit genotype.  The order matters for widths where a genotype
// and a hex body have the same length (n = 5 is the first, where both are
// 8 characters); --format rs picks the genotype reading explicitly.
AnalyzeInput parse_analyze_input(const std::string& text, const std::string& format) {
    if (format == "tt" || format == "tt-hex") {
        return {parse_table(text), ""};
    }
    if (format == "rs") {
        const RsGenotype g = parse_genotype(text);
        return {decode_rs(g, OrbitTable::build(g.n)), g.to_string()};
    }
    try {
        return {parse_table(text), ""};
    } catch (const ParseError&) {
    }
    const RsGenotype g = parse_genotype(text);
    return {decode_rs(g, OrbitTable::build(g.n)), g.to_string()};
}

int cmd_analyze(const std::string& path, const std::string& format) {
    const AnalyzeInput input = parse_analyze_input(read_file(path), format);
    const TruthTable& tt = input.table;
    const PropertyReport report = analyze(tt);

    std::cout << "n                  " << report.n << "\n";
    std::cout << "weight             " << tt.weight() << "\n";
    std::cout << "nonlinearity       " << report.nonlinearity << " (bound "
              << covering_bound(report.n) << ")\n";
    std::cout << "balance deficit    " << report.balance_deficit << "\n";
    std::cout << "algebraic degree   " << report.algebraic_degree << "\n";
    std::cout << "max |W|            " << report.max_abs_walsh << " at " << report.max_count
              << " positions\n";
    std::cout << "bent               " << (report.is_bent ? "yes" : "no") << "\n";

    const bool symmetric = is_rotation_symmetric(tt);
    std::cout << "rotation symmetric " << (symmetric ? "yes" : "no") << "\n";
    if (!input.genotype.empty()) {
        std::cout << "genotype           " << input.genotype << "\n";
    } else if (symmetric) {
        const OrbitTable orbits = OrbitTable::build(tt.n);
        std::cout << "genotype           " << encode_rs(tt, orbits).to_string() << "\n";
    }
    return 0;
}

int cmd_exhaust(int n, std::uint64_t limit, int jobs) {
    const ExhaustReport report = exhaust_rs(n, limit, jobs);
    std::cout << "n " << report.n << ": " << report.total << " rotation symmetric functions\n";
    std::cout << "best nonlinearity " << report.best_nonlinearity << " (bound "
              << covering_bound(n) << "), attained by " << report.best_count
              << ", first genotype " << genotype_from_integer(n, report.best_witness).to_string()
              << "\n";
    if (report.any_balanced) {
        std::cout << "best balanced nonlinearity " << report.best_balanced_nonlinearity
                  << ", attained by " << report.best_balanced_count << ", first genotype "
                  << genotype_from_integer(n, report.best_balanced_witness).to_string() << "\n";
    } else {
        std::cout << "no balanced function in the class\n";
    }
    return 0;
}

int cmd_orbits(int n) {
    const OrbitTable orbits = OrbitTable::build(n);
    std::cout << "n " << n << ": " << orbits.orbit_count << " orbits, "
              << "2^" << orbits.orbit_count << " rotation symmetric functions\n";
    for (int k = 0; k < orbits.orbit_count; ++k) {
        std::cout << k << "\trep " << orbits.representative[k] << "\tsize "
                  << orbits.orbit_size[k] << "\n";
    }
    return 0;
}

int cmd_stats(const std::vector<std::string>& paths) {
    std::vector<RunResult> runs;
    for (const std::string& path : paths) runs.push_back(run_result_from_json(read_file(path)));

    std::vector<double> fitness_values, nl_values;
    for (const RunResult& run : runs) {
        fitness_values.push_back(run.best_fitness.scalar());
        nl_values.push_back(run.best_fitness.nonlinearity);
    }
    BatchResult batch;
    batch.runs = std::move(runs);
    batch.fitness_summary = five_number_summary(fitness_values);
    batch.nonlinearity_summary = five_number_summary(nl_values);
    std::cout << batch_summary_csv(batch.runs.front().config, batch);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rotation symmetric Boolean function toolkit"};
    app.require_subcommand(1);

    EvolveArgs evolve_args;
    CLI::App* evolve = app.add_subcommand("evolve", "run evolutionary searches");
    evolve->add_option("--n", evolve_args.n, "variable count")->capture_default_str();
    evolve->add_option("--encoding", evolve_args.encoding, "tt, fp, or gp")
        ->capture_default_str();
    evolve->add_option("--engine", evolve_args.engine, "sst or de")->capture_default_str();
    evolve->add_option("--objective", evolve_args.objective, "bent or balanced")
        ->capture_default_str();
    evolve->add_option("--runs", evolve_args.runs, "independent runs")->capture_default_str();
    evolve->add_option("--seed", evolve_args.seed, "seed of the first run")
        ->capture_default_str();
    evolve->add_option("--population", evolve_args.population, "population size")
        ->capture_default_str();
    evolve->add_option("--budget", evolve_args.budget, "fitness evaluations per run")
        ->capture_default_str();
    evolve->add_option("--pmut", evolve_args.pmut, "per-child mutation probability")
        ->capture_default_str();
    evolve->add_option("--decode", evolve_args.decode, "bits per fp value")
        ->capture_default_str();
    evolve->add_option("--max-depth", evolve_args.max_depth, "gp tree depth limit")
        ->capture_default_str();
    evolve->add_option("--out", evolve_args.out, "output directory")->capture_default_str();
    evolve->add_option("--jobs", evolve_args.jobs, "worker threads (0 = all)")
        ->capture_default_str();

    std::string analyze_path;
    std::string analyze_format = "auto";
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "report properties of a function file");
    analyze_cmd->add_option("file", analyze_path, "input file")->required();
    analyze_cmd->add_option("--format", analyze_format, "auto, tt, tt-hex, or rs")
        ->check(CLI::IsMember({"auto", "tt", "tt-hex", "rs"}))
        ->capture_default_str();

    int exhaust_n = 4;
    std::uint64_t exhaust_limit = 1u << 20;
    int exhaust_jobs = 0;
    CLI::App* exhaust_cmd = app.add_subcommand("exhaust", "scan every function of a small class");
    exhaust_cmd->add_option("--n", exhaust_n, "variable count")->capture_default_str();
    exhaust_cmd->add_option("--limit", exhaust_limit, "refuse scans larger than this")
        ->capture_default_str();
    exhaust_cmd->add_option("--jobs", exhaust_jobs, "worker threads (0 = all)")
        ->capture_default_str();

    int orbits_n = 5;
    CLI::App* orbits_cmd = app.add_subcommand("orbits", "print the input orbit table");
    orbits_cmd->add_option("--n", orbits_n, "variable count")->capture_default_str();

    std::vector<std::string> stats_paths;
    CLI::App* stats_cmd = app.add_subcommand("stats", "summarize saved run records");
    stats_cmd->add_option("files", stats_paths, "run record files")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (evolve->parsed()) return cmd_evolve(evolve_args);
        if (analyze_cmd->parsed()) return cmd_analyze(analyze_path, analyze_format);
        if (exhaust_cmd->parsed()) return cmd_exhaust(exhaust_n, exhaust_limit, exhaust_jobs);
        if (orbits_cmd->parsed()) return cmd_orbits(orbits_n);
        if (stats_cmd->parsed()) return cmd_stats(stats_paths);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 1;
}
