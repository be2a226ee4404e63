#ifndef OSOMA_RUNNER_HPP
#define OSOMA_RUNNER_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "osoma/baselines.hpp"
#include "osoma/core.hpp"
#include "osoma/errors.hpp"
#include "osoma/soma.hpp"

namespace osoma {

enum class Algorithm { Soma, Osoma, De, Pso };

inline Algorithm algorithm_from_name(const std::string& name) {
    if (name == "soma") return Algorithm::Soma;
    if (name == "osoma") return Algorithm::Osoma;
    if (name == "de") return Algorithm::De;
    if (name == "pso") return Algorithm::Pso;
    throw ConfigError("unknown algorithm: " + name);
}

inline const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Soma: return "soma";
        case Algorithm::Osoma: return "osoma";
        case Algorithm::De: return "de";
        case Algorithm::Pso: return "pso";
    }
    return "?";
}

struct RunConfig {
    std::size_t population_size = 20;
    std::size_t max_iterations = 100;
    double target_fitness = -std::numeric_limits<double>::infinity();
    SomaParams soma;
    DeParams de;
    PsoParams pso;
};

/// Outcome of one seeded run. The history holds the best fitness seen up to
/// each iteration and is therefore non-increasing.
struct RunResult {
    RealVector best_position;
    double best_fitness = std::numeric_limits<double>::infinity();
    std::vector<std::pair<std::size_t, double>> history;  // (iteration, best fitness)

    std::size_t iterations() const { return history.empty() ? 0 : history.back().first; }
};

/// Runs one algorithm until the iteration budget is exhausted or the best
/// fitness reaches the target. Identical (algorithm, config, seed) inputs
/// reproduce the run exactly.
inline RunResult run(Algorithm algorithm, const Objective& objective, const SearchSpace& space,
                     const RunConfig& config, std::uint64_t seed) {
    RandomStream rng(seed);
    Population pop = init_population(space, config.population_size, objective, rng);
    PsoState pso_state;
    if (algorithm == Algorithm::Pso) pso_state = PsoState::from_population(pop);

    RunResult result;
    result.best_position = pop.leader().position;
    result.best_fitness = pop.leader().fitness;
    result.history.emplace_back(0, result.best_fitness);
    if (result.best_fitness <= config.target_fitness) return result;

    for (std::size_t it = 1; it <= config.max_iterations; ++it) {
        switch (algorithm) {
            case Algorithm::Soma:
                soma_migrate(pop, config.soma, space, objective, rng);
                break;
            case Algorithm::Osoma:
                osoma_migrate(pop, config.soma, space, objective, rng);
                break;
            case Algorithm::De:
                de_step(pop, config.de, space, objective, rng);
                break;
            case Algorithm::Pso:
                pso_step(pop, pso_state, config.pso, space, objective, rng);
                break;
        }
        const Individual& best_now =
            (algorithm == Algorithm::Pso) ? pso_state.global_best : pop.leader();
        if (best_now.fitness < result.best_fitness) {
            result.best_fitness = best_now.fitness;
            result.best_position = best_now.position;
        }
        result.history.emplace_back(it, result.best_fitness);
        if (result.best_fitness <= config.target_fitness) break;
    }
    return result;
}

} // namespace osoma

#endif
