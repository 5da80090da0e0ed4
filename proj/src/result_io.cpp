#include "rsbf/result_io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rsbf {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc()) throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

ordered_json config_to_json(const RunConfig& cfg) {
    ordered_json j;
    j["n"] = cfg.n;
    j["encoding"] = encoding_name(cfg.encoding);
    j["engine"] = engine_name(cfg.engine);
    j["objective"] = objective_name(cfg.objective);
    j["population"] = cfg.population_size;
    j["budget"] = cfg.budget;
    j["mutation_probability"] = cfg.mutation_probability;
    j["seed"] = cfg.seed;
    j["decode_bits"] = cfg.decode_bits;
    j["max_depth"] = cfg.max_depth;
    j["de_weight"] = cfg.de_weight;
    j["de_crossover_rate"] = cfg.de_crossover_rate;
    return j;
}

RunConfig config_from_json(const ordered_json& j) {
    RunConfig cfg;
    cfg.n = j.at("n").get<int>();
    cfg.encoding = parse_encoding(j.at("encoding").get<std::string>());
    cfg.engine = parse_engine(j.at("engine").get<std::string>());
    cfg.objective = parse_objective(j.at("objective").get<std::string>());
    cfg.population_size = j.at("population").get<int>();
    cfg.budget = j.at("budget").get<std::uint64_t>();
    cfg.mutation_probability = j.at("mutation_probability").get<double>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.decode_bits = j.at("decode_bits").get<int>();
    cfg.max_depth = j.at("max_depth").get<int>();
    cfg.de_weight = j.at("de_weight").get<double>();
    cfg.de_crossover_rate = j.at("de_crossover_rate").get<double>();
    return cfg;
}

}  // namespace

std::string run_result_to_json(const RunResult& result) {
    ordered_json j;
    j["schema_version"] = kRunSchemaVersion;
    j["config"] = config_to_json(result.config);

    ordered_json best;
    best["fitness"] = result.best_fitness.scalar();
    best["fitness_scaled"] = result.best_fitness.scaled;
    best["nonlinearity"] = result.best_fitness.nonlinearity;
    best["balance_deficit"] = result.best_fitness.balance_deficit;
    best["max_count"] = result.best_fitness.max_count;
    best["genotype"] = result.best_genotype;
    best["truth_table_hex"] = table_hex_digits(result.best_table);
    j["best"] = best;

    j["evaluations"] = result.evaluations;

    ordered_json trajectory = ordered_json::array();
    for (const TrajectoryPoint& point : result.trajectory) {
        ordered_json p;
        p["evaluation"] = point.evaluation;
        p["fitness_scaled"] = point.fitness_scaled;
        p["nonlinearity"] = point.nonlinearity;
        p["balance_deficit"] = point.balance_deficit;
        trajectory.push_back(std::move(p));
    }
    j["trajectory"] = std::move(trajectory);

    return j.dump(2) + "\n";
}

RunResult run_result_from_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    const int version = j.at("schema_version").get<int>();
    if (version != kRunSchemaVersion)
        throw std::invalid_argument("unsupported run record schema version " +
                                    std::to_string(version));

    RunResult result;
    result.config = config_from_json(j.at("config"));

    const ordered_json& best = j.at("best");
    result.best_fitness.n = result.config.n;
    result.best_fitness.scaled = best.at("fitness_scaled").get<std::int64_t>();
    result.best_fitness.nonlinearity = best.at("nonlinearity").get<int>();
    result.best_fitness.balance_deficit = best.at("balance_deficit").get<int>();
    result.best_fitness.max_count = best.at("max_count").get<int>();
    result.best_genotype = best.at("genotype").get<std::string>();
    result.best_table =
        table_from_hex_digits(result.config.n, best.at("truth_table_hex").get<std::string>());

    result.evaluations = j.at("evaluations").get<std::uint64_t>();

    for (const ordered_json& p : j.at("trajectory")) {
        TrajectoryPoint point;
        point.evaluation = p.at("evaluation").get<std::uint64_t>();
        point.fitness_scaled = p.at("fitness_scaled").get<std::int64_t>();
        point.nonlinearity = p.at("nonlinearity").get<int>();
        point.balance_deficit = p.at("balance_deficit").get<int>();
        result.trajectory.push_back(point);
    }
    return result;
}

std::string batch_summary_csv(const RunConfig& config, const BatchResult& batch) {
    std::ostringstream out;
    out << "n,encoding,engine,objective,min,q1,median,q3,max,"
           "nl_min,nl_q1,nl_median,nl_q3,nl_max\n";
    const FiveNum& fit = batch.fitness_summary;
    const FiveNum& nl = batch.nonlinearity_summary;
    out << config.n << ',' << encoding_name(config.encoding) << ',' << engine_name(config.engine)
        << ',' << objective_name(config.objective);
    for (double v : {fit.min, fit.q1, fit.median, fit.q3, fit.max, nl.min, nl.q1, nl.median,
                     nl.q3, nl.max})
        out << ',' << format_double(v);
    out << '\n';
    return out.str();
}

std::string default_run_path(const std::string& root, const RunConfig& config) {
    return root + "/" + std::to_string(config.n) + "/" + encoding_name(config.encoding) + "/" +
           objective_name(config.objective) + "/run_" + std::to_string(config.seed) + ".json";
}

std::string default_summary_path(const std::string& root, const RunConfig& config) {
    return root + "/" + std::to_string(config.n) + "/" + encoding_name(config.encoding) + "/" +
           objective_name(config.objective) + "/summary.csv";
}

void atomic_write_file(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());

    const fs::path temp = target.parent_path() / (target.filename().string() + ".tmp");
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + temp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("short write to " + temp.string());
    }
    fs::rename(temp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace rsbf
