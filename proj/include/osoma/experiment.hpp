#ifndef OSOMA_EXPERIMENT_HPP
#define OSOMA_EXPERIMENT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "osoma/benchmarks.hpp"
#include "osoma/dynamic.hpp"
#include "osoma/errors.hpp"
#include "osoma/io.hpp"
#include "osoma/runner.hpp"

namespace osoma {

/// Keys accepted by --set style parameter overrides, benchmark mode.
inline void apply_overrides(RunConfig& config, const std::map<std::string, double>& values) {
    for (const auto& [key, value] : values) {
        if (key == "path_length") config.soma.path_length = value;
        else if (key == "step") config.soma.step = value;
        else if (key == "pr") config.soma.pr = value;
        else if (key == "lambda_low") config.soma.lambda_low = value;
        else if (key == "lambda_high") config.soma.lambda_high = value;
        else if (key == "de_f") config.de.f = value;
        else if (key == "de_cr") config.de.cr = value;
        else if (key == "pso_inertia") config.pso.inertia = value;
        else if (key == "pso_cognitive") config.pso.cognitive = value;
        else if (key == "pso_social") config.pso.social = value;
        else if (key == "target_fitness") config.target_fitness = value;
        else {
            throw ConfigError(
                "unknown parameter '" + key +
                "' (expected one of: path_length, step, pr, lambda_low, lambda_high, de_f, "
                "de_cr, pso_inertia, pso_cognitive, pso_social, target_fitness)");
        }
    }
    config.soma.validate();
    config.de.validate();
    config.pso.validate();
}

/// Same keys for the dynamic mode, minus target_fitness.
inline void apply_overrides(DtspConfig& config, const std::map<std::string, double>& values) {
    for (const auto& [key, value] : values) {
        if (key == "path_length") config.soma.path_length = value;
        else if (key == "step") config.soma.step = value;
        else if (key == "pr") config.soma.pr = value;
        else if (key == "lambda_low") config.soma.lambda_low = value;
        else if (key == "lambda_high") config.soma.lambda_high = value;
        else if (key == "de_f") config.de.f = value;
        else if (key == "de_cr") config.de.cr = value;
        else if (key == "pso_inertia") config.pso.inertia = value;
        else if (key == "pso_cognitive") config.pso.cognitive = value;
        else if (key == "pso_social") config.pso.social = value;
        else {
            throw ConfigError(
                "unknown parameter '" + key +
                "' (expected one of: path_length, step, pr, lambda_low, lambda_high, de_f, "
                "de_cr, pso_inertia, pso_cognitive, pso_social)");
        }
    }
    config.soma.validate();
    config.de.validate();
    config.pso.validate();
}

namespace detail {

inline void require_unique_algorithms(const std::vector<Algorithm>& algorithms) {
    if (algorithms.empty()) throw ConfigError("at least one algorithm is required");
    std::set<Algorithm> seen;
    for (Algorithm a : algorithms) {
        if (!seen.insert(a).second) {
            throw ConfigError(std::string("algorithm '") + algorithm_name(a) + "' listed twice");
        }
    }
}

inline std::vector<std::uint64_t> checked_seeds(const std::vector<std::uint64_t>& seeds) {
    if (seeds.empty()) throw ConfigError("at least one seed is required");
    std::set<std::uint64_t> seen;
    for (std::uint64_t s : seeds) {
        if (!seen.insert(s).second) {
            throw ConfigError("seed " + std::to_string(s) + " listed twice");
        }
    }
    std::vector<std::uint64_t> sorted(seeds.begin(), seeds.end());
    std::sort(sorted.begin(), sorted.end());
    return sorted;
}

inline double mean_of(const std::vector<double>& values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

inline double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

inline std::vector<Algorithm> sorted_by_name(std::vector<Algorithm> algorithms) {
    std::sort(algorithms.begin(), algorithms.end(), [](Algorithm a, Algorithm b) {
        return std::string(algorithm_name(a)) < std::string(algorithm_name(b));
    });
    return algorithms;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Benchmark suites

struct BenchmarkExperiment {
    std::vector<Algorithm> algorithms;
    std::string function = "sphere";
    std::vector<std::size_t> dimensions;
    std::size_t population_size = 20;
    std::size_t iterations = 100;
    std::vector<std::uint64_t> seeds;
    std::map<std::string, double> overrides;
};

struct BenchmarkSuiteResult {
    std::vector<SummaryRow> summary;
    std::vector<ConvergenceRow> convergence;
};

/// Runs every (algorithm, dimension, seed) cell of the experiment. All
/// validation happens up front; nothing is computed if any part is invalid.
inline BenchmarkSuiteResult run_benchmark_suite(const BenchmarkExperiment& experiment) {
    detail::require_unique_algorithms(experiment.algorithms);
    const std::vector<std::uint64_t> seeds = detail::checked_seeds(experiment.seeds);
    const BenchmarkFunction& function = benchmark_by_name(experiment.function);
    if (experiment.dimensions.empty()) throw ConfigError("at least one dimension is required");
    for (std::size_t dim : experiment.dimensions) function.check_dimension(dim);
    if (experiment.population_size < 2) throw ConfigError("population size must be at least 2");
    if (experiment.iterations == 0) throw ConfigError("iteration count must be positive");

    RunConfig config;
    config.population_size = experiment.population_size;
    config.max_iterations = experiment.iterations;
    apply_overrides(config, experiment.overrides);

    std::vector<std::size_t> dims(experiment.dimensions);
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());

    BenchmarkSuiteResult result;
    for (Algorithm algorithm : detail::sorted_by_name(experiment.algorithms)) {
        const std::string alg_name = algorithm_name(algorithm);
        for (std::size_t dim : dims) {
            const SearchSpace space = function.space(dim);
            std::vector<double> finals;
            for (std::uint64_t seed : seeds) {
                const RunResult run_result =
                    run(algorithm, function.objective, space, config, seed);
                finals.push_back(run_result.best_fitness);
                result.summary.push_back({alg_name, function.key, dim, std::to_string(seed),
                                          run_result.best_fitness,
                                          std::to_string(run_result.iterations())});
                for (const auto& [iteration, best] : run_result.history) {
                    result.convergence.push_back(
                        {alg_name, function.key, dim, seed, iteration, best});
                }
            }
            result.summary.push_back(
                {alg_name, function.key, dim, "mean", detail::mean_of(finals), ""});
            result.summary.push_back(
                {alg_name, function.key, dim, "median", detail::median_of(finals), ""});
        }
    }
    return result;
}

inline void write_benchmark_suite(const BenchmarkSuiteResult& result, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);
    detail::write_text_file((dir / "summary.csv").string(), summary_to_csv(result.summary));
    detail::write_text_file((dir / "convergence.csv").string(),
                            convergence_to_csv(result.convergence));
}

// ---------------------------------------------------------------------------
// Dynamic scenarios

struct DtspExperiment {
    std::vector<Algorithm> algorithms;
    DtspConfig config;
    std::vector<std::uint64_t> seeds;
    std::map<std::string, double> overrides;
};

struct DtspScenarioResult {
    std::uint64_t seed = 0;
    std::vector<HistoryRow> history;               // all algorithms, grouped
    std::vector<std::pair<std::string, TourRecord>> tours;  // algorithm name -> final tour
};

/// Runs every algorithm on the same provider and seed so trajectories are
/// directly comparable. One result per seed.
inline std::vector<DtspScenarioResult> run_dtsp_scenario(const CostProvider& provider,
                                                         const DtspExperiment& experiment) {
    detail::require_unique_algorithms(experiment.algorithms);
    const std::vector<std::uint64_t> seeds = detail::checked_seeds(experiment.seeds);
    if (experiment.config.population_size < 2) {
        throw ConfigError("population size must be at least 2");
    }
    if (experiment.config.iterations == 0) throw ConfigError("iteration count must be positive");

    DtspConfig config = experiment.config;
    apply_overrides(config, experiment.overrides);

    std::vector<DtspScenarioResult> results;
    for (std::uint64_t seed : seeds) {
        DtspScenarioResult scenario;
        scenario.seed = seed;
        for (Algorithm algorithm : detail::sorted_by_name(experiment.algorithms)) {
            const std::string alg_name = algorithm_name(algorithm);
            const SimulationResult sim = simulate(provider, algorithm, config, seed);
            for (const auto& step : sim.history) {
                scenario.history.push_back({step.iteration, alg_name, step.best_cost, step.event});
            }
            TourRecord record;
            record.algorithm = alg_name;
            record.cost = sim.final_cost;
            record.tour = sim.final_tour;
            scenario.tours.emplace_back(alg_name, std::move(record));
        }
        results.push_back(std::move(scenario));
    }
    return results;
}

/// One seed writes history.csv and tour_<algorithm>.json directly into
/// out_dir; several seeds get seed_<s>/ subdirectories with the same names.
inline void write_dtsp_scenario(const std::vector<DtspScenarioResult>& results,
                                const std::string& out_dir) {
    const std::filesystem::path base(out_dir);
    for (const auto& scenario : results) {
        const std::filesystem::path dir =
            results.size() == 1 ? base : base / ("seed_" + std::to_string(scenario.seed));
        std::filesystem::create_directories(dir);
        detail::write_text_file((dir / "history.csv").string(), history_to_csv(scenario.history));
        for (const auto& [alg_name, record] : scenario.tours) {
            write_tour_record((dir / ("tour_" + alg_name + ".json")).string(), record);
        }
    }
}

// ---------------------------------------------------------------------------
// Instance generation

enum class InstanceStyle { Euclidean, RandomAsymmetric };

inline InstanceStyle instance_style_from_name(const std::string& name) {
    if (name == "euclidean") return InstanceStyle::Euclidean;
    if (name == "random") return InstanceStyle::RandomAsymmetric;
    throw ConfigError("unknown instance style '" + name + "' (expected euclidean or random)");
}

/// Builds a reproducible instance. Euclidean: cities on the unit square,
/// symmetric costs round(distance * 1e5). Random: independent directed
/// costs round(u * 1e5) with u in [0.1, 1). Integer-valued costs keep
/// optimum comparisons exact.
inline TspInstance generate_instance(std::size_t cities, std::uint64_t seed, InstanceStyle style) {
    if (cities < 3 || cities > 64) {
        throw ConfigError("city count must lie in [3, 64], got " + std::to_string(cities));
    }
    RandomStream rng(seed);
    const std::size_t n = cities;
    std::vector<std::string> ids;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        ids.push_back("c" + std::to_string(i + 1));
        labels.push_back("City " + std::to_string(i + 1));
    }

    std::vector<double> flat(n * n, 0.0);
    if (style == InstanceStyle::Euclidean) {
        std::vector<std::pair<double, double>> points;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = rng.uniform01();
            const double y = rng.uniform01();
            points.emplace_back(x, y);
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double dx = points[i].first - points[j].first;
                const double dy = points[i].second - points[j].second;
                const double c = std::round(std::sqrt(dx * dx + dy * dy) * 1e5);
                flat[i * n + j] = c;
                flat[j * n + i] = c;
            }
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                flat[i * n + j] = std::round(rng.uniform(0.1, 1.0) * 1e5);
            }
        }
    }

    TspInstance instance;
    instance.matrix = DynamicCostMatrix(ids, flat);
    instance.labels = std::move(labels);
    instance.directed = style == InstanceStyle::RandomAsymmetric;
    return instance;
}

} // namespace osoma

#endif
