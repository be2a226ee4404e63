// Command line front end: benchmark suites, dynamic tour scenarios, and
// instance generation. Exit codes: 0 success, 2 bad configuration or input,
// 3 runtime failure.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "osoma/osoma.hpp"

namespace {

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    out.push_back(current);
    return out;
}

std::vector<osoma::Algorithm> parse_algorithms(const std::string& text) {
    std::vector<osoma::Algorithm> out;
    for (const auto& token : split_list(text)) {
        if (token.empty()) throw osoma::ConfigError("empty entry in --algorithms");
        out.push_back(osoma::algorithm_from_name(token));
    }
    return out;
}

std::vector<std::size_t> parse_dims(const std::string& text) {
    std::vector<std::size_t> out;
    for (const auto& token : split_list(text)) {
        if (token.empty()) throw osoma::ConfigError("empty entry in --dims");
        out.push_back(static_cast<std::size_t>(osoma::parse_u64(token)));
    }
    return out;
}

// A bare integer N is shorthand for seeds 1..N. A comma-separated list is
// taken literally; a trailing comma forces the literal reading for a single
// value ("7," means seed 7, "7" means seeds 1..7).
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
    if (text.empty()) throw osoma::ConfigError("--seeds must not be empty");
    if (text.find(',') == std::string::npos) {
        const std::uint64_t count = osoma::parse_u64(text);
        if (count == 0) throw osoma::ConfigError("--seeds count must be positive");
        std::vector<std::uint64_t> out;
        for (std::uint64_t s = 1; s <= count; ++s) out.push_back(s);
        return out;
    }
    std::vector<std::string> tokens = split_list(text);
    if (tokens.size() > 1 && tokens.back().empty()) tokens.pop_back();
    std::vector<std::uint64_t> out;
    for (const auto& token : tokens) {
        if (token.empty()) throw osoma::ConfigError("empty entry in --seeds");
        out.push_back(osoma::parse_u64(token));
    }
    return out;
}

std::map<std::string, double> parse_overrides(const std::vector<std::string>& entries) {
    std::map<std::string, double> out;
    for (const auto& entry : entries) {
        const std::size_t eq = entry.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == entry.size()) {
            throw osoma::ConfigError("--set expects key=value, got '" + entry + "'");
        }
        const std::string key = entry.substr(0, eq);
        const double value = osoma::parse_double(entry.substr(eq + 1));
        if (!out.emplace(key, value).second) {
            throw osoma::ConfigError("--set key '" + key + "' given twice");
        }
    }
    return out;
}

struct CliOptions {
    std::string mode;
    std::string algorithms = "soma,osoma,de,pso";
    std::string function = "sphere";
    std::string dims = "10";
    std::size_t population = 20;
    std::size_t iterations = 0;  // 0 = mode default
    std::string seeds = "1";
    std::string instance_path;
    std::string schedule_path;
    bool reinit_on_event = false;
    std::vector<std::string> set_entries;
    std::string out_dir;
    std::size_t cities = 8;
    std::string style = "euclidean";
};

int run_benchmark_mode(const CliOptions& opt) {
    osoma::BenchmarkExperiment experiment;
    experiment.algorithms = parse_algorithms(opt.algorithms);
    experiment.function = opt.function;
    experiment.dimensions = parse_dims(opt.dims);
    experiment.population_size = opt.population;
    experiment.iterations = opt.iterations == 0 ? 100 : opt.iterations;
    experiment.seeds = parse_seeds(opt.seeds);
    experiment.overrides = parse_overrides(opt.set_entries);

    const osoma::BenchmarkSuiteResult result = osoma::run_benchmark_suite(experiment);
    osoma::write_benchmark_suite(result, opt.out_dir);
    const std::filesystem::path dir(opt.out_dir);
    std::cout << "wrote " << (dir / "summary.csv").string() << "\n";
    std::cout << "wrote " << (dir / "convergence.csv").string() << "\n";
    return 0;
}

int run_dtsp_mode(const CliOptions& opt) {
    if (opt.instance_path.empty()) {
        throw osoma::ConfigError("--instance is required in dtsp mode");
    }
    const osoma::TspInstance instance = osoma::read_instance(opt.instance_path);
    osoma::EventSchedule schedule;
    if (!opt.schedule_path.empty()) {
        schedule = osoma::read_schedule(opt.schedule_path);
    }
    const osoma::ReplayProvider provider(instance.matrix, schedule);

    osoma::DtspExperiment experiment;
    experiment.algorithms = parse_algorithms(opt.algorithms);
    experiment.config.population_size = opt.population;
    experiment.config.iterations = opt.iterations == 0 ? 60 : opt.iterations;
    experiment.config.reinit_on_event = opt.reinit_on_event;
    experiment.seeds = parse_seeds(opt.seeds);
    experiment.overrides = parse_overrides(opt.set_entries);

    const auto results = osoma::run_dtsp_scenario(provider, experiment);
    osoma::write_dtsp_scenario(results, opt.out_dir);
    const std::filesystem::path base(opt.out_dir);
    for (const auto& scenario : results) {
        const std::filesystem::path dir =
            results.size() == 1 ? base : base / ("seed_" + std::to_string(scenario.seed));
        std::cout << "wrote " << (dir / "history.csv").string() << "\n";
        for (const auto& [alg_name, record] : scenario.tours) {
            std::cout << "wrote " << (dir / ("tour_" + alg_name + ".json")).string() << "\n";
        }
    }
    return 0;
}

int run_generate_mode(const CliOptions& opt) {
    const std::vector<std::uint64_t> seeds = parse_seeds(opt.seeds);
    if (seeds.size() != 1) {
        throw osoma::ConfigError("generate mode expects exactly one seed");
    }
    const osoma::TspInstance instance =
        osoma::generate_instance(opt.cities, seeds.front(), osoma::instance_style_from_name(opt.style));
    std::filesystem::create_directories(opt.out_dir);
    const std::filesystem::path path = std::filesystem::path(opt.out_dir) / "instance.json";
    osoma::write_instance(path.string(), instance);
    std::cout << "wrote " << path.string() << "\n";
    return 0;
}

int run_cli(int argc, char** argv) {
    CliOptions opt;
    CLI::App app{"Self-organizing migration toolkit: continuous benchmarks and dynamic tours"};
    app.add_option("--mode", opt.mode, "benchmark, dtsp, or generate")->required();
    app.add_option("--algorithms", opt.algorithms,
                   "comma list from soma, osoma, de, pso (default: all)");
    app.add_option("--function", opt.function, "benchmark function name or key (default: sphere)");
    app.add_option("--dims", opt.dims, "comma list of dimensions (default: 10)");
    app.add_option("--pop", opt.population, "population size (default: 20)");
    app.add_option("--iters", opt.iterations,
                   "migration loops (default: 100 benchmark, 60 dtsp)");
    app.add_option("--seeds", opt.seeds,
                   "seed count N (runs seeds 1..N) or explicit comma list (default: 1)");
    app.add_option("--instance", opt.instance_path, "problem instance JSON (dtsp mode)");
    app.add_option("--schedule", opt.schedule_path, "event schedule JSON (dtsp mode)");
    app.add_flag("--reinit-on-event", opt.reinit_on_event,
                 "restart the population after each event instead of repairing it");
    app.add_option("--set", opt.set_entries, "parameter override key=value (repeatable)");
    app.add_option("--out", opt.out_dir, "output directory")->required();
    app.add_option("--cities", opt.cities, "city count for generate mode (default: 8)");
    app.add_option("--style", opt.style, "generate mode: euclidean or random");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (opt.mode == "benchmark") return run_benchmark_mode(opt);
    if (opt.mode == "dtsp") return run_dtsp_mode(opt);
    if (opt.mode == "generate") return run_generate_mode(opt);
    throw osoma::ConfigError("unknown mode '" + opt.mode +
                             "' (expected benchmark, dtsp, or generate)");
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const osoma::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const osoma::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const osoma::LookupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const osoma::DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
