#include "iqaoa/circuit.hpp"
#include "iqaoa/enumerator.hpp"
#include "iqaoa/error.hpp"
#include "iqaoa/fixtures.hpp"
#include "iqaoa/optimizer.hpp"
#include "iqaoa/rank_codec.hpp"
#include "iqaoa/report.hpp"
#include "iqaoa/schedule.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

namespace fs = std::filesystem;
using namespace iqaoa;

namespace {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kValidation = 2,
    kBudget = 3,
    kIo = 4,
};

struct LoadedInstance {
    std::string source;  // path or fixture name, as given
    JsspInstance inst;
    std::optional<Mixer> fixture_mixer;
};

// Accepts a file path or the name of a bundled fixture.
LoadedInstance resolve_instance(const std::string& source) {
    if (fs::exists(source)) {
        return {source, load_instance(source), std::nullopt};
    }
    if (auto f = find_fixture(source)) {
        return {source, parse_instance(f->text), f->default_mixer};
    }
    throw IoError("no instance file or fixture named '" + source + "'");
}

std::string timestamp() {
    const std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

Json manifest(const std::string& command, const LoadedInstance& li, Json config, Json outputs) {
    return {{"schema", kManifestSchema},
            {"command", command},
            {"instance", {{"source", li.source}, {"text", render_instance(li.inst)}}},
            {"config", std::move(config)},
            {"seed", nullptr},
            {"timestamp", timestamp()},
            {"versions", {{"iqaoa", IQAOA_VERSION}}},
            {"outputs", std::move(outputs)}};
}

// ---------------------------------------------------------------- enumerate

struct EnumerateArgs {
    std::string instance;
    std::string out_dir;
    std::uint64_t budget = EnumerationOptions{}.budget;
    unsigned workers = 0;
    bool svg = false;
};

int run_enumerate(const LoadedInstance& li, const EnumerateArgs& args) {
    EnumerationOptions options;
    options.budget = args.budget;
    options.workers = args.workers;
    const auto dist = enumerate_distribution(li.inst, options);
    const auto csv = to_csv(dist);
    if (args.out_dir.empty()) {
        std::cout << csv;
        return kOk;
    }
    const fs::path dir(args.out_dir);
    fs::create_directories(dir);
    Json outputs = {{"distribution", "distribution.csv"}, {"summary", "summary.json"}};
    write_text(dir / "distribution.csv", csv);
    write_text(dir / "summary.json", distribution_summary(dist).dump(2) + "\n");
    if (args.svg) {
        write_text(dir / "distribution.svg", histogram_svg(dist, std::nullopt));
        outputs["svg"] = "distribution.svg";
    }
    // Worker count does not affect the result, so it is not part of the config.
    Json config = {{"budget", args.budget}, {"svg", args.svg}};
    write_text(dir / "manifest.json", manifest("enumerate", li, config, outputs).dump(2) + "\n");
    std::cout << distribution_summary(dist).dump(2) << "\n";
    return kOk;
}

// -------------------------------------------------------------------- solve

struct SolveArgs {
    std::string instance;
    std::string out_dir;
    int mixer = 0;  // 0: fixture default, else 1
    unsigned depth = 2;
    std::size_t shots = 1000;
    unsigned generations = 200;
    unsigned population = 15;
    std::uint64_t seed = 1;
    double xi = 100000.0;
    double theta = 1.0;
    std::string initial = "zero";
    bool wide_bounds = false;
    unsigned workers = 1;
    bool emit_initial = true;
    bool check_schedules = false;
    bool dump_amplitudes = false;
    bool svg = false;
    bool verbose = false;
    std::uint64_t budget = EnumerationOptions{}.budget;
};

GaConfig solve_config(const LoadedInstance& li, const SolveArgs& args) {
    GaConfig cfg;
    cfg.mixer = args.mixer ? mixer_from_tag(args.mixer) : li.fixture_mixer.value_or(Mixer::RyAfterChain);
    cfg.depth = args.depth;
    cfg.shots_per_eval = args.shots;
    cfg.generations = args.generations;
    cfg.population = args.population;
    cfg.seed = args.seed;
    cfg.xi = args.xi;
    cfg.theta = args.theta;
    cfg.initial = initial_state_from_name(args.initial);
    if (args.wide_bounds) {
        cfg.gene_min = -2 * std::numbers::pi;
        cfg.gene_max = 2 * std::numbers::pi;
    }
    cfg.workers = args.workers;
    cfg.check_schedules = args.check_schedules;
    cfg.validate();
    return cfg;
}

Json solve_manifest_config(const GaConfig& cfg, const SolveArgs& args) {
    Json j = config_json(cfg);
    j["emit_initial"] = args.emit_initial;
    j["dump_amplitudes"] = args.dump_amplitudes;
    j["svg"] = args.svg;
    j["enumeration_budget"] = args.budget;
    return j;
}

int run_solve(const LoadedInstance& li, const SolveArgs& args, const GaConfig& cfg) {
    if (args.out_dir.empty()) {
        throw ValidationError("solve requires --out-dir");
    }
    const fs::path dir(args.out_dir);
    fs::create_directories(dir);

    // Fail early if the register does not fit.
    const RankCodec codec(li.inst);
    if (codec.qubit_count() >= 63 || (std::uint64_t{1} << codec.qubit_count()) > amplitude_budget()) {
        throw BudgetError(std::to_string(codec.qubit_count()) + " qubits exceed the amplitude budget",
                          std::to_string(codec.qubit_count()));
    }

    std::optional<MakespanDistribution> initial;
    if (args.emit_initial) {
        EnumerationOptions options;
        options.budget = args.budget;
        initial = enumerate_distribution(li.inst, options);
    }

    std::function<void(const GenerationRecord&)> progress;
    if (args.verbose) {
        progress = [](const GenerationRecord& rec) {
            std::cerr << "generation " << rec.generation << " best " << rec.best.c << " mean "
                      << rec.best.mean_makespan << "\n";
        };
    }
    const auto result = run_ga(li.inst, cfg, progress);

    Json outputs = {{"result", "result.json"},
                    {"convergence", "convergence.csv"},
                    {"final_histogram", "final_histogram.csv"}};
    write_text(dir / "result.json", result_json(li.source, result, initial).dump(2) + "\n");
    write_text(dir / "convergence.csv", convergence_csv(result));
    write_text(dir / "final_histogram.csv", to_csv(result.final_distribution));
    if (initial) {
        write_text(dir / "initial_histogram.csv", to_csv(*initial));
        outputs["initial_histogram"] = "initial_histogram.csv";
    }
    if (args.svg) {
        write_text(dir / "histogram.svg", histogram_svg(result.final_distribution, initial));
        outputs["svg"] = "histogram.svg";
    }
    if (args.dump_amplitudes) {
        write_text(dir / "amplitudes.csv", amplitudes_csv(run_circuit(codec.qubit_count(), result.best_params)));
        outputs["amplitudes"] = "amplitudes.csv";
    }
    auto m = manifest("solve", li, solve_manifest_config(cfg, args), outputs);
    m["seed"] = cfg.seed;
    write_text(dir / "manifest.json", m.dump(2) + "\n");

    std::cout << "best objective " << result.best_objective.c << " (mean makespan "
              << result.best_objective.mean_makespan << ", min " << result.best_objective.min_makespan << " x"
              << result.best_objective.min_count << ")\n";
    if (initial) {
        const int opt = initial->min_makespan();
        std::cout << "optimum " << opt << ": initial P " << initial->probability(opt) << ", final P "
                  << result.final_distribution.probability(opt) << ", amplification "
                  << amplification(*initial, result.final_distribution) << "\n";
    }
    return kOk;
}

// -------------------------------------------------------------------- rerun

int run_rerun(const std::string& manifest_path, const std::string& out_dir) {
    const Json m = Json::parse(read_text(manifest_path));
    if (m.value("schema", "") != kManifestSchema) {
        throw ValidationError("unsupported manifest schema");
    }
    LoadedInstance li{m.at("instance").at("source").get<std::string>(),
                      parse_instance(m.at("instance").at("text").get<std::string>()), std::nullopt};
    const Json& config = m.at("config");
    const auto command = m.at("command").get<std::string>();
    if (command == "enumerate") {
        EnumerateArgs args;
        args.out_dir = out_dir;
        args.budget = config.at("budget").get<std::uint64_t>();
        args.svg = config.value("svg", false);
        return run_enumerate(li, args);
    }
    if (command == "solve") {
        SolveArgs args;
        args.out_dir = out_dir;
        args.emit_initial = config.value("emit_initial", true);
        args.dump_amplitudes = config.value("dump_amplitudes", false);
        args.svg = config.value("svg", false);
        args.budget = config.value("enumeration_budget", EnumerationOptions{}.budget);
        return run_solve(li, args, config_from_json(config));
    }
    throw ValidationError("manifest has unknown command '" + command + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Indirect QAOA for job-shop scheduling: enumeration, rank codec, and circuit search"};
    app.require_subcommand(1);
    app.set_version_flag("--version", IQAOA_VERSION);

    EnumerateArgs enum_args;
    auto* enumerate = app.add_subcommand("enumerate", "Exact makespan distribution over all vectors");
    enumerate->add_option("instance", enum_args.instance, "Instance file or fixture name")->required();
    enumerate->add_option("--out-dir", enum_args.out_dir, "Write CSV, summary and manifest here (default: CSV to stdout)");
    enumerate->add_option("--budget", enum_args.budget, "Refuse instances with more vectors than this");
    enumerate->add_option("--workers", enum_args.workers, "Worker threads (0 = hardware concurrency)");
    enumerate->add_flag("--svg", enum_args.svg, "Also write an SVG histogram");

    std::string rank_instance, rank_vector;
    auto* rank = app.add_subcommand("rank", "Lexicographic rank of a vector");
    rank->add_option("instance", rank_instance)->required();
    rank->add_option("vector", rank_vector, "e.g. 2,0,2,1,0,1,0,1,2")->required();

    std::string unrank_instance, unrank_value;
    auto* unrank_cmd = app.add_subcommand("unrank", "Vector of a given rank");
    unrank_cmd->add_option("instance", unrank_instance)->required();
    unrank_cmd->add_option("rank", unrank_value)->required();

    std::string decode_instance, decode_vector, decode_format = "json";
    auto* decode_cmd = app.add_subcommand("decode", "Semi-active schedule of a vector");
    decode_cmd->add_option("instance", decode_instance)->required();
    decode_cmd->add_option("vector", decode_vector)->required();
    decode_cmd->add_option("--format", decode_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Optimize circuit angles with the genetic algorithm");
    solve->add_option("instance", solve_args.instance)->required();
    solve->add_option("--out-dir", solve_args.out_dir, "Output directory")->required();
    solve->add_option("--mixer", solve_args.mixer, "Mixer variant 1..4 (default: fixture's, else 1)")
        ->check(CLI::Range(1, 4));
    solve->add_option("--depth", solve_args.depth, "Circuit layers")->check(CLI::PositiveNumber);
    solve->add_option("--shots", solve_args.shots, "Shots per objective evaluation")->check(CLI::PositiveNumber);
    solve->add_option("--generations", solve_args.generations);
    solve->add_option("--population", solve_args.population);
    solve->add_option("--seed", solve_args.seed);
    solve->add_option("--xi", solve_args.xi, "Weight of the mean makespan");
    solve->add_option("--theta", solve_args.theta, "Weight of the min-scarcity term");
    solve->add_option("--initial", solve_args.initial, "Initial register state")
        ->check(CLI::IsMember({"zero", "uniform"}));
    solve->add_flag("--wide-bounds", solve_args.wide_bounds, "Search angles in [-2pi, 2pi] instead of [-pi, pi]");
    solve->add_option("--workers", solve_args.workers, "Parallel objective evaluations");
    solve->add_flag("--emit-initial,!--no-initial", solve_args.emit_initial,
                    "Enumerate the initial distribution (default on)");
    solve->add_option("--enumeration-budget", solve_args.budget);
    solve->add_flag("--check-schedules", solve_args.check_schedules, "Validate the schedule of every shot");
    solve->add_flag("--dump-amplitudes", solve_args.dump_amplitudes, "Write best-state amplitudes (q <= 12)");
    solve->add_flag("--svg", solve_args.svg, "Also write an SVG histogram");
    solve->add_flag("-v,--verbose", solve_args.verbose, "Print progress per generation");

    std::string rerun_manifest, rerun_out;
    auto* rerun = app.add_subcommand("rerun", "Regenerate outputs from a manifest");
    rerun->add_option("manifest", rerun_manifest)->required();
    rerun->add_option("--out-dir", rerun_out)->required();

    auto* list = app.add_subcommand("fixtures", "List bundled instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kValidation;
    }

    try {
        if (*enumerate) {
            return run_enumerate(resolve_instance(enum_args.instance), enum_args);
        }
        if (*rank) {
            const auto li = resolve_instance(rank_instance);
            const auto v = parse_vector(rank_vector);
            std::cout << to_string(rank_of(li.inst, v)) << "\n";
            return kOk;
        }
        if (*unrank_cmd) {
            const auto li = resolve_instance(unrank_instance);
            std::cout << format_vector(unrank(li.inst, parse_bigint(unrank_value))) << "\n";
            return kOk;
        }
        if (*decode_cmd) {
            const auto li = resolve_instance(decode_instance);
            const auto s = decode(li.inst, parse_vector(decode_vector));
            if (decode_format == "csv") {
                const Json dump = schedule_json(li.inst, s);
                std::cout << "job,op,machine,start,end\n";
                for (const auto& op : dump.at("operations")) {
                    std::cout << op["job"] << ',' << op["op"] << ',' << op["machine"] << ',' << op["start"] << ','
                              << op["end"] << "\n";
                }
                std::cout << "# makespan " << s.makespan << "\n";
            } else {
                std::cout << schedule_json(li.inst, s).dump(2) << "\n";
            }
            return kOk;
        }
        if (*solve) {
            const auto li = resolve_instance(solve_args.instance);
            return run_solve(li, solve_args, solve_config(li, solve_args));
        }
        if (*rerun) {
            return run_rerun(rerun_manifest, rerun_out);
        }
        if (*list) {
            for (const auto& f : fixtures()) {
                const auto inst = parse_instance(f.text);
                std::cout << f.name << "  " << inst.n_jobs() << "x" << inst.n_machines() << "  mixer "
                          << mixer_tag(f.default_mixer) << "  vectors " << to_string(total_vector_count(inst))
                          << "\n";
            }
            return kOk;
        }
    } catch (const BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kBudget;
    } catch (const IoError& e) {
        std::cerr << "io: " << e.what() << "\n";
        return kIo;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "io: " << e.what() << "\n";
        return kIo;
    } catch (const ParseError& e) {
        std::cerr << "parse: " << e.what() << "\n";
        return kValidation;
    } catch (const ValidationError& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return kValidation;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return kValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}
