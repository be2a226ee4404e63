#ifndef OSOMA_BASELINES_HPP
#define OSOMA_BASELINES_HPP

#include <cstddef>
#include <vector>

#include "osoma/core.hpp"
#include "osoma/errors.hpp"
#include "osoma/random.hpp"

namespace osoma {

/// DE/rand/1/bin parameters.
struct DeParams {
    double f = 0.5;   // differential weight
    double cr = 0.9;  // crossover rate

    void validate() const {
        if (!(f > 0.0) || f > 2.0) throw ConfigError("de params require 0 < f <= 2");
        if (cr < 0.0 || cr > 1.0) throw ConfigError("de params require 0 <= cr <= 1");
    }
};

/// Global-best PSO coefficients (constriction-style defaults).
struct PsoParams {
    double inertia = 0.729;
    double cognitive = 1.49445;
    double social = 1.49445;

    void validate() const {
        if (inertia < 0.0) throw ConfigError("pso params require inertia >= 0");
        if (cognitive < 0.0 || social < 0.0) {
            throw ConfigError("pso params require nonnegative cognitive/social coefficients");
        }
    }
};

/// One DE/rand/1/bin generation with greedy replacement. Donors are drawn
/// from the population state at generation start.
inline void de_step(Population& pop, const DeParams& params, const SearchSpace& space,
                    const Objective& objective, RandomStream& rng) {
    const std::size_t np = pop.members.size();
    const std::size_t dim = space.dimension();
    const std::vector<Individual> old = pop.members;

    RealVector trial(dim);
    for (std::size_t i = 0; i < np; ++i) {
        std::size_t r1, r2, r3;
        do { r1 = rng.uniform_index(np); } while (r1 == i);
        do { r2 = rng.uniform_index(np); } while (r2 == i || r2 == r1);
        do { r3 = rng.uniform_index(np); } while (r3 == i || r3 == r1 || r3 == r2);
        const std::size_t j_rand = rng.uniform_index(dim);

        for (std::size_t k = 0; k < dim; ++k) {
            if (rng.uniform01() < params.cr || k == j_rand) {
                trial[k] = old[r1].position[k] +
                           params.f * (old[r2].position[k] - old[r3].position[k]);
            } else {
                trial[k] = old[i].position[k];
            }
        }
        trial = confine(std::move(trial), space, rng);
        const double fit = objective(trial);
        if (fit <= pop.members[i].fitness) {
            pop.members[i].position = trial;
            pop.members[i].fitness = fit;
        }
    }
    select_leader(pop);
}

/// Per-particle velocity and memory for global-best PSO.
struct PsoState {
    std::vector<RealVector> velocities;
    std::vector<Individual> personal_best;
    Individual global_best;

    static PsoState from_population(const Population& pop) {
        PsoState st;
        const std::size_t dim = pop.members.front().position.size();
        st.velocities.assign(pop.members.size(), RealVector(dim, 0.0));
        st.personal_best = pop.members;
        st.global_best = pop.leader();
        return st;
    }
};

/// One synchronous global-best PSO sweep: all particles move against the
/// previous global best, then memories are updated.
inline void pso_step(Population& pop, PsoState& state, const PsoParams& params,
                     const SearchSpace& space, const Objective& objective, RandomStream& rng) {
    const std::size_t dim = space.dimension();

    for (std::size_t i = 0; i < pop.members.size(); ++i) {
        Individual& ind = pop.members[i];
        RealVector& vel = state.velocities[i];
        for (std::size_t k = 0; k < dim; ++k) {
            const double r1 = rng.uniform01();
            const double r2 = rng.uniform01();
            vel[k] = params.inertia * vel[k] +
                     params.cognitive * r1 * (state.personal_best[i].position[k] - ind.position[k]) +
                     params.social * r2 * (state.global_best.position[k] - ind.position[k]);
            ind.position[k] += vel[k];
        }
        ind.position = confine(std::move(ind.position), space, rng);
        ind.fitness = objective(ind.position);
    }

    for (std::size_t i = 0; i < pop.members.size(); ++i) {
        if (pop.members[i].fitness < state.personal_best[i].fitness) {
            state.personal_best[i] = pop.members[i];
        }
        if (state.personal_best[i].fitness < state.global_best.fitness) {
            state.global_best = state.personal_best[i];
        }
    }
    select_leader(pop);
}

} // namespace osoma

#endif
