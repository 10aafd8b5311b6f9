// qsched: generate / solve / compare / sweep front-end for conflict-graph
// observation scheduling. One config file drives every subcommand; flags
// override scalar fields (flag > file > default). All randomness flows from
// explicit seeds, and every output except run_meta.json is byte-identical
// across repeated runs of the same config.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsched/constellation.hpp"
#include "qsched/errors.hpp"
#include "qsched/hamiltonian.hpp"
#include "qsched/mwis.hpp"
#include "qsched/qaoa.hpp"
#include "qsched/rng.hpp"
#include "qsched/serialize.hpp"

namespace fs = std::filesystem;
using namespace qsched;

namespace {

// Sub-stream tag separating measurement sampling from optimizer seeding.
constexpr std::uint64_t kSamplingStream = 913;

struct GeneratorSpec {
    std::uint64_t seed = 0;
    int n = 6;
    double region = 10.0;
    double radius_min = 1.0;
    double radius_max = 2.0;
    double weight_min = 0.5;
    double weight_max = 5.0;
};

struct RunConfig {
    std::string instance_file; // file source when non-empty
    bool has_generator = false;
    GeneratorSpec generator;
    double threshold = 0.15;
    bool threshold_set = false; // explicit value overrides the instance file's
    std::string method = "exact";
    double rho = kDefaultPenaltyRate;
    OptimizerConfig opt{};
    std::uint64_t shots = kDefaultShots;
    std::uint64_t seed = 1;
    fs::path output_dir = "out";
    std::string sweep_axis;
    std::vector<double> sweep_values;
    bool dump_hamiltonian = false;
};

RunConfig parse_config_file(const fs::path& path) {
    const json j = read_json_file(path);
    RunConfig cfg;
    try {
        if (j.contains("instance")) {
            const json& ji = j.at("instance");
            if (ji.contains("file"))
                cfg.instance_file = ji.at("file").get<std::string>();
            if (ji.contains("generator")) {
                const json& jg = ji.at("generator");
                cfg.has_generator = true;
                cfg.generator.seed = jg.value("seed", cfg.generator.seed);
                cfg.generator.n = jg.value("n", cfg.generator.n);
                cfg.generator.region = jg.value("region", cfg.generator.region);
                cfg.generator.radius_min = jg.value("radius_min", cfg.generator.radius_min);
                cfg.generator.radius_max = jg.value("radius_max", cfg.generator.radius_max);
                cfg.generator.weight_min = jg.value("weight_min", cfg.generator.weight_min);
                cfg.generator.weight_max = jg.value("weight_max", cfg.generator.weight_max);
            }
        }
        if (j.contains("threshold")) {
            cfg.threshold = j.at("threshold").get<double>();
            cfg.threshold_set = true;
        }
        cfg.method = j.value("method", cfg.method);
        cfg.rho = j.value("rho", cfg.rho);
        if (j.contains("qaoa")) {
            const json& jq = j.at("qaoa");
            cfg.opt.p = jq.value("p", cfg.opt.p);
            cfg.opt.restarts = jq.value("restarts", cfg.opt.restarts);
            cfg.opt.grid_points = jq.value("grid_points", cfg.opt.grid_points);
            cfg.opt.max_iters = jq.value("max_iters", cfg.opt.max_iters);
            cfg.opt.step_init = jq.value("step_init", cfg.opt.step_init);
            cfg.opt.step_min = jq.value("step_min", cfg.opt.step_min);
            cfg.opt.fd_epsilon = jq.value("fd_epsilon", cfg.opt.fd_epsilon);
            cfg.shots = jq.value("shots", cfg.shots);
        }
        cfg.seed = j.value("seed", cfg.seed);
        cfg.output_dir = fs::path(j.value("output_dir", cfg.output_dir.string()));
        if (j.contains("sweep")) {
            const json& js = j.at("sweep");
            cfg.sweep_axis = js.value("axis", std::string{});
            if (js.contains("values"))
                cfg.sweep_values = js.at("values").get<std::vector<double>>();
        }
    } catch (const json::exception& e) {
        throw ConfigError("malformed config " + path.string() + ": " + e.what());
    }
    return cfg;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void ensure_output_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw ConfigError("cannot create output directory " + dir.string() + ": " + ec.message());
}

// Timing and timestamps live here, not in the deterministic reports.
void write_run_meta(const fs::path& dir, const std::string& command,
                    const std::map<std::string, double>& elapsed) {
    json j{{"command", command}, {"timestamp_utc", utc_timestamp()}, {"elapsed_s", json(elapsed)}};
    write_json_file(dir / "run_meta.json", j);
}

struct LoadedInstance {
    std::vector<Footprint> footprints;
    double threshold = 0.0;
};

LoadedInstance load_instance(const RunConfig& cfg) {
    if (!cfg.instance_file.empty()) {
        InstanceFile file = read_instance_file(cfg.instance_file);
        const double threshold = cfg.threshold_set ? cfg.threshold : file.threshold;
        return {std::move(file.footprints), threshold};
    }
    if (cfg.has_generator) {
        const GeneratorSpec& g = cfg.generator;
        return {random_constellation(g.seed, g.n, g.region, g.radius_min, g.radius_max,
                                     g.weight_min, g.weight_max),
                cfg.threshold};
    }
    throw ConfigError("no instance source: set instance.file or instance.generator");
}

MwisInstance build_instance(const LoadedInstance& li) {
    return MwisInstance{build_conflict_graph(li.footprints, OverlapPolicy{li.threshold})};
}

struct QaoaRun {
    SolveReport report;
    OptimizeResult optimum;
};

QaoaRun run_qaoa(const MwisInstance& inst, const RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    PenaltyRate rho(cfg.rho);
    OptimizerConfig oc = cfg.opt;
    oc.seed = cfg.seed;
    QaoaRun run;
    run.optimum = optimize(inst, rho, oc);
    run.report = extract_solution(inst, rho, run.optimum.params, cfg.shots,
                                  derive_seed(cfg.seed, kSamplingStream));
    run.report.metadata["p"] = static_cast<double>(oc.p);
    run.report.metadata["rho"] = cfg.rho;
    // Full pipeline time (optimization + readout), not just the readout.
    run.report.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return run;
}

int cmd_generate(const RunConfig& cfg) {
    if (!cfg.has_generator)
        throw ConfigError("generate needs an instance.generator block");
    const auto t0 = std::chrono::steady_clock::now();

    const LoadedInstance li = load_instance(cfg);
    const ConflictGraph graph = build_conflict_graph(li.footprints, OverlapPolicy{li.threshold});

    ensure_output_dir(cfg.output_dir);
    write_instance_file(cfg.output_dir / "instance.json", li.footprints, li.threshold);
    write_json_file(cfg.output_dir / "graph.json", graph_to_json(graph));
    write_json_file(cfg.output_dir / "summary.json",
                    json{{"n", graph.node_count()},
                         {"edges", graph.edge_count()},
                         {"density", graph.density()}});

    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_run_meta(cfg.output_dir, "generate", {{"total", elapsed}});
    std::cout << "wrote " << (cfg.output_dir / "instance.json").string() << " (n="
              << graph.node_count() << ", edges=" << graph.edge_count() << ")\n";
    return 0;
}

int cmd_solve(const RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const LoadedInstance li = load_instance(cfg);
    const MwisInstance inst = build_instance(li);
    ensure_output_dir(cfg.output_dir);

    SolveReport report;
    if (cfg.method == "exact") {
        report = solve_exact(inst);
    } else if (cfg.method == "greedy") {
        report = solve_greedy(inst);
    } else if (cfg.method == "qaoa") {
        QaoaRun run = run_qaoa(inst, cfg);
        report = std::move(run.report);
        write_trace_csv(cfg.output_dir / "trace.csv", run.optimum.trace);
        if (inst.node_count() <= 12) {
            const StateVector state = evolve(inst, PenaltyRate(cfg.rho), run.optimum.params);
            write_json_file(cfg.output_dir / "probabilities.json", probabilities_to_json(state));
        }
    } else {
        throw ConfigError("unknown method '" + cfg.method + "' (expected exact|greedy|qaoa)");
    }

    if (cfg.dump_hamiltonian)
        write_json_file(cfg.output_dir / "hamiltonian.json",
                        hamiltonian_to_json(build_problem(inst, PenaltyRate(cfg.rho))));

    write_json_file(cfg.output_dir / "report.json", report_to_json(report, false));
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_run_meta(cfg.output_dir, "solve", {{"total", elapsed}, {cfg.method, report.elapsed_s}});
    std::cout << "method=" << cfg.method << " weight=" << format_double(report.weight)
              << " bits=" << report.best.to_string() << "\n";
    return 0;
}

int cmd_compare(const RunConfig& cfg) {
    const LoadedInstance li = load_instance(cfg);
    const MwisInstance inst = build_instance(li);
    ensure_output_dir(cfg.output_dir);

    const SolveReport exact = solve_exact(inst); // throws SizeLimitError past the oracle cap
    const SolveReport greedy = solve_greedy(inst);
    const QaoaRun qaoa = run_qaoa(inst, cfg);

    auto ratio = [&](double w) { return exact.weight > 0.0 ? w / exact.weight : 1.0; };
    json j{{"n", inst.node_count()},
           {"edges", inst.graph.edge_count()},
           {"exact",
            json{{"bits", exact.best.to_string()}, {"weight", exact.weight}, {"ratio", 1.0}}},
           {"greedy",
            json{{"bits", greedy.best.to_string()},
                 {"weight", greedy.weight},
                 {"ratio", ratio(greedy.weight)}}},
           {"qaoa", json{{"bits", qaoa.report.best.to_string()},
                         {"weight", qaoa.report.weight},
                         {"ratio", ratio(qaoa.report.weight)},
                         {"expectation_hp", qaoa.report.metadata.at("expectation_hp")},
                         {"feasible_fraction", qaoa.report.metadata.at("feasible_fraction")}}}};
    write_json_file(cfg.output_dir / "compare.json", j);
    write_run_meta(cfg.output_dir, "compare",
                   {{"exact", exact.elapsed_s},
                    {"greedy", greedy.elapsed_s},
                    {"qaoa", qaoa.report.elapsed_s}});
    std::cout << "exact=" << format_double(exact.weight)
              << " greedy=" << format_double(greedy.weight)
              << " qaoa=" << format_double(qaoa.report.weight) << "\n";
    return 0;
}

int cmd_sweep(const RunConfig& cfg) {
    if (cfg.sweep_axis != "rho" && cfg.sweep_axis != "depth" && cfg.sweep_axis != "threshold")
        throw ConfigError("sweep axis must be rho, depth or threshold");
    if (cfg.sweep_values.empty())
        throw ConfigError("sweep needs a non-empty values list");

    const LoadedInstance li = load_instance(cfg);
    ensure_output_dir(cfg.output_dir);

    std::ofstream csv(cfg.output_dir / "sweep.csv", std::ios::binary);
    if (!csv)
        throw ConfigError("cannot write " + (cfg.output_dir / "sweep.csv").string());
    csv << "value,n_edges,best_weight,expectation_hp,feasible_fraction\n";

    const auto t0 = std::chrono::steady_clock::now();
    for (const double value : cfg.sweep_values) {
        RunConfig row_cfg = cfg;
        LoadedInstance row_li = li;
        if (cfg.sweep_axis == "rho") {
            row_cfg.rho = value;
        } else if (cfg.sweep_axis == "depth") {
            if (value < 1.0 || value != std::floor(value))
                throw ConfigError("depth values must be positive integers");
            row_cfg.opt.p = static_cast<int>(value);
        } else {
            row_li.threshold = value;
        }
        const MwisInstance inst = build_instance(row_li);
        const QaoaRun run = run_qaoa(inst, row_cfg); // same seeds on every row
        csv << format_double(value) << "," << inst.graph.edge_count() << ","
            << format_double(run.report.weight) << ","
            << format_double(run.report.metadata.at("expectation_hp")) << ","
            << format_double(run.report.metadata.at("feasible_fraction")) << "\n";
    }
    if (!csv)
        throw ConfigError("write failed for sweep.csv");
    csv.close();

    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_run_meta(cfg.output_dir, "sweep", {{"total", elapsed}});
    std::cout << "wrote " << (cfg.output_dir / "sweep.csv").string() << " ("
              << cfg.sweep_values.size() << " rows)\n";
    return 0;
}

// Flag values held separately so that only flags the user actually passed
// override the config file.
struct FlagOverrides {
    std::string config_path;
    std::string instance_file;
    std::string method;
    std::string output_dir;
    std::string axis;
    double rho = 0.0;
    double threshold = 0.0;
    int depth = 0;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    int restarts = 0;
    std::vector<double> values;
    bool dump_hamiltonian = false;
};

void add_common_flags(CLI::App* cmd, FlagOverrides& f) {
    cmd->add_option("--config", f.config_path, "JSON config file driving the run");
    cmd->add_option("--instance", f.instance_file, "instance JSON file (overrides config)");
    cmd->add_option("--out,-o", f.output_dir, "output directory");
    cmd->add_option("--seed", f.seed, "run seed (optimizer + sampling)");
    cmd->add_option("--threshold", f.threshold, "overlap fraction threshold in [0, 1]");
    cmd->add_option("--rho", f.rho, "penalty rate (>= 1)");
    cmd->add_option("--depth,-p", f.depth, "circuit depth p");
    cmd->add_option("--shots", f.shots, "measurement shots");
    cmd->add_option("--restarts", f.restarts, "optimizer restarts");
}

RunConfig resolve_config(const CLI::App* cmd, const FlagOverrides& f) {
    RunConfig cfg;
    if (cmd->count("--config"))
        cfg = parse_config_file(f.config_path);
    if (cmd->count("--instance")) {
        cfg.instance_file = f.instance_file;
        cfg.has_generator = false;
    }
    if (cmd->count("--out"))
        cfg.output_dir = f.output_dir;
    if (cmd->count("--seed"))
        cfg.seed = f.seed;
    if (cmd->count("--threshold")) {
        cfg.threshold = f.threshold;
        cfg.threshold_set = true;
    }
    if (cmd->count("--rho"))
        cfg.rho = f.rho;
    if (cmd->count("--depth"))
        cfg.opt.p = f.depth;
    if (cmd->count("--shots"))
        cfg.shots = f.shots;
    if (cmd->count("--restarts"))
        cfg.opt.restarts = f.restarts;
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"conflict-graph observation scheduling: generate instances, solve them "
                 "exactly, greedily or with a simulated QAOA, and sweep parameters"};
    app.require_subcommand(1);

    FlagOverrides fg, fs_, fc, fw;
    CLI::App* generate = app.add_subcommand("generate", "write a random instance + conflict graph");
    add_common_flags(generate, fg);
    CLI::App* solve = app.add_subcommand("solve", "solve one instance with the configured method");
    add_common_flags(solve, fs_);
    solve->add_option("--method", fs_.method, "exact | greedy | qaoa");
    solve->add_flag("--dump-hamiltonian", fs_.dump_hamiltonian,
                    "also write the problem operator coefficients");
    CLI::App* compare = app.add_subcommand("compare", "run exact, greedy and qaoa side by side");
    add_common_flags(compare, fc);
    CLI::App* sweep = app.add_subcommand("sweep", "qaoa runs across rho / depth / threshold values");
    add_common_flags(sweep, fw);
    sweep->add_option("--axis", fw.axis, "rho | depth | threshold");
    sweep->add_option("--values", fw.values, "sweep values")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (generate->parsed())
            return cmd_generate(resolve_config(generate, fg));
        if (solve->parsed()) {
            RunConfig cfg = resolve_config(solve, fs_);
            if (solve->count("--method"))
                cfg.method = fs_.method;
            cfg.dump_hamiltonian |= fs_.dump_hamiltonian;
            return cmd_solve(cfg);
        }
        if (compare->parsed())
            return cmd_compare(resolve_config(compare, fc));
        if (sweep->parsed()) {
            RunConfig cfg = resolve_config(sweep, fw);
            if (sweep->count("--axis"))
                cfg.sweep_axis = fw.axis;
            if (sweep->count("--values"))
                cfg.sweep_values = fw.values;
            return cmd_sweep(cfg);
        }
        throw ConfigError("no subcommand selected");
    } catch (const SizeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
