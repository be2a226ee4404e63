#ifndef OSOMA_SOMA_HPP
#define OSOMA_SOMA_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "osoma/core.hpp"
#include "osoma/errors.hpp"
#include "osoma/random.hpp"

namespace osoma {

/// Migration parameters shared by the plain and the opportunistic variant.
/// The lambda interval feeds only the opportunistic perturbation.
struct SomaParams {
    double path_length = 3.0;  // maximum relative displacement toward the leader
    double step = 0.11;        // increment of the path variable L
    double pr = 0.1;           // perturbation probability
    double lambda_low = 0.60;
    double lambda_high = 0.85;

    void validate() const {
        if (!(step > 0.0) || !(step <= path_length)) {
            throw ConfigError("soma params require 0 < step <= path_length");
        }
        if (pr < 0.0 || pr > 1.0) {
            throw ConfigError("soma params require 0 <= pr <= 1");
        }
        if (!(lambda_low > 0.0) || !(lambda_low < lambda_high) || !(lambda_high < 1.0)) {
            throw ConfigError("soma params require 0 < lambda_low < lambda_high < 1");
        }
    }

    /// Number of candidate path points: L = step, 2*step, ..., <= path_length.
    std::size_t path_point_count() const {
        return static_cast<std::size_t>(std::floor(path_length / step + 1e-9));
    }
};

namespace detail {

// Both perturbation variants consume one (gamma, lambda) pair per component,
// so runs that differ only in the variant stay draw-aligned and can be
// compared trajectory-for-trajectory under a shared seed.
inline RealVector perturbation(std::size_t dim, const SomaParams& p, RandomStream& rng,
                               bool opportunistic) {
    RealVector phi(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const double gamma = rng.uniform01();
        const double lambda = rng.uniform(p.lambda_low, p.lambda_high);
        if (gamma < p.pr) {
            phi[k] = 1.0;
        } else {
            phi[k] = opportunistic ? lambda / static_cast<double>(dim) : 0.0;
        }
    }
    return phi;
}

} // namespace detail

/// Binary perturbation vector: component k is 1 when gamma_k < PR, else 0.
inline RealVector soma_perturbation(std::size_t dim, const SomaParams& params, RandomStream& rng) {
    return detail::perturbation(dim, params, rng, false);
}

/// Opportunistic perturbation vector: component k is 1 when gamma_k < PR,
/// else lambda_k / dim with lambda_k drawn from U(lambda_low, lambda_high).
/// No component is ever zero, so a migrating individual can never sit still
/// in a dimension where it differs from the leader.
inline RealVector osoma_perturbation(std::size_t dim, const SomaParams& params, RandomStream& rng) {
    return detail::perturbation(dim, params, rng, true);
}

namespace detail {

// One all-to-one migration loop. Every non-leader individual walks the path
// grid toward the frozen leader position and jumps to the best improving
// candidate; the leader is re-selected afterwards.
inline void migrate(Population& pop, const SomaParams& params, const SearchSpace& space,
                    const Objective& objective, RandomStream& rng, bool opportunistic) {
    const std::size_t dim = space.dimension();
    const std::size_t points = params.path_point_count();
    const RealVector leader_pos = pop.leader().position;  // frozen for the whole loop

    for (std::size_t i = 0; i < pop.members.size(); ++i) {
        if (i == pop.leader_index) continue;
        Individual& ind = pop.members[i];
        const RealVector phi = perturbation(dim, params, rng, opportunistic);

        RealVector best_pos;
        double best_fit = ind.fitness;
        RealVector candidate(dim);
        for (std::size_t s = 1; s <= points; ++s) {
            const double path = static_cast<double>(s) * params.step;
            for (std::size_t k = 0; k < dim; ++k) {
                candidate[k] = ind.position[k] + (leader_pos[k] - ind.position[k]) * phi[k] * path;
            }
            candidate = confine(std::move(candidate), space, rng);
            const double fit = objective(candidate);
            if (fit < best_fit) {
                best_fit = fit;
                best_pos = candidate;
            }
        }
        if (!best_pos.empty()) {
            ind.position = std::move(best_pos);
            ind.fitness = best_fit;
        }
    }
    select_leader(pop);
}

} // namespace detail

/// One migration loop with the binary perturbation rule.
inline void soma_migrate(Population& pop, const SomaParams& params, const SearchSpace& space,
                         const Objective& objective, RandomStream& rng) {
    detail::migrate(pop, params, space, objective, rng, false);
}

/// One migration loop with the opportunistic perturbation rule.
inline void osoma_migrate(Population& pop, const SomaParams& params, const SearchSpace& space,
                          const Objective& objective, RandomStream& rng) {
    detail::migrate(pop, params, space, objective, rng, true);
}

} // namespace osoma

#endif
