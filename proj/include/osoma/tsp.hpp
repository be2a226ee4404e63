#ifndef OSOMA_TSP_HPP
#define OSOMA_TSP_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "osoma/baselines.hpp"
#include "osoma/cost_matrix.hpp"
#include "osoma/errors.hpp"
#include "osoma/random.hpp"
#include "osoma/soma.hpp"
#include "osoma/swap.hpp"

namespace osoma {

/// A tour and its closed-cycle cost under some cost matrix state.
struct TourIndividual {
    Tour tour;
    double cost = std::numeric_limits<double>::infinity();
};

struct TourPopulation {
    std::vector<TourIndividual> members;
    std::size_t leader_index = 0;

    const TourIndividual& leader() const { return members[leader_index]; }
    std::size_t size() const { return members.size(); }
};

/// Closed-cycle cost: consecutive edges plus the edge returning to the
/// first city. Lookups are directed, so asymmetric matrices work.
inline double tour_cost(const Tour& tour, const DynamicCostMatrix& costs) {
    if (tour.size() < 2) {
        throw InstanceError("tour cost needs at least 2 cities");
    }
    if (tour.size() != costs.size()) {
        throw InstanceError("tour covers " + std::to_string(tour.size()) + " cities, matrix has " +
                            std::to_string(costs.size()));
    }
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < tour.size(); ++k) {
        total += costs.cost(tour[k], tour[k + 1]);
    }
    total += costs.cost(tour.back(), tour.front());
    return total;
}

inline std::size_t select_tour_leader(TourPopulation& pop) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop.members.size(); ++i) {
        if (pop.members[i].cost < pop.members[best].cost) best = i;
    }
    pop.leader_index = best;
    return best;
}

/// Random permutations over the matrix's cities, evaluated and with the
/// leader selected.
inline TourPopulation init_tour_population(const DynamicCostMatrix& costs, std::size_t size,
                                           RandomStream& rng) {
    if (size < 2) {
        throw ConfigError("tour population size must be at least 2, got " + std::to_string(size));
    }
    TourPopulation pop;
    pop.members.reserve(size);
    Tour base(costs.size());
    std::iota(base.begin(), base.end(), 0);
    for (std::size_t i = 0; i < size; ++i) {
        TourIndividual ind;
        ind.tour = base;
        shuffle(ind.tour, rng);
        ind.cost = tour_cost(ind.tour, costs);
        pop.members.push_back(std::move(ind));
    }
    select_tour_leader(pop);
    return pop;
}

namespace detail {

// Discrete all-to-one migration. Each non-leader decomposes its gap to the
// leader into a swap sequence and walks the path grid; at each path point L
// every operator joins the candidate independently with probability
// min(1, phi * L), phi drawn fresh per operator. Greedy acceptance.
inline void tour_migrate(TourPopulation& pop, const SomaParams& params,
                         const DynamicCostMatrix& costs, RandomStream& rng, bool opportunistic) {
    const std::size_t points = params.path_point_count();
    const double n = static_cast<double>(costs.size());
    const Tour leader_tour = pop.leader().tour;  // frozen for the whole loop

    for (std::size_t i = 0; i < pop.members.size(); ++i) {
        if (i == pop.leader_index) continue;
        TourIndividual& ind = pop.members[i];
        const SwapSequence gap = subtract(leader_tour, ind.tour);
        if (gap.empty()) continue;

        Tour best_tour;
        double best_cost = ind.cost;
        for (std::size_t s = 1; s <= points; ++s) {
            const double path = static_cast<double>(s) * params.step;
            Tour candidate = ind.tour;
            for (const auto& op : gap) {
                const double gamma = rng.uniform01();
                const double lambda = rng.uniform(params.lambda_low, params.lambda_high);
                const double phi =
                    gamma < params.pr ? 1.0 : (opportunistic ? lambda / n : 0.0);
                const double pick = std::min(1.0, phi * path);
                if (rng.uniform01() < pick) apply_swap(candidate, op);
            }
            const double c = tour_cost(candidate, costs);
            if (c < best_cost) {
                best_cost = c;
                best_tour = std::move(candidate);
            }
        }
        if (!best_tour.empty()) {
            ind.tour = std::move(best_tour);
            ind.cost = best_cost;
        }
    }
    select_tour_leader(pop);
}

} // namespace detail

/// Discrete migration with the opportunistic perturbation rule: every
/// operator keeps a small nonzero pick probability, so individuals that
/// differ from the leader always sample genuinely new tours.
inline void discrete_osoma_migrate(TourPopulation& pop, const SomaParams& params,
                                   const DynamicCostMatrix& costs, RandomStream& rng) {
    detail::tour_migrate(pop, params, costs, rng, true);
}

/// Discrete migration with the binary rule: non-perturbed operators are
/// skipped outright.
inline void discrete_soma_migrate(TourPopulation& pop, const SomaParams& params,
                                  const DynamicCostMatrix& costs, RandomStream& rng) {
    detail::tour_migrate(pop, params, costs, rng, false);
}

/// Discrete DE step: donors recombine through swap sequences. The mutant is
/// r1 shifted by a weighted sample of (r2 - r3); the trial keeps each mutant
/// operator with probability cr, with one forced when the draw picks none.
inline void discrete_de_step(TourPopulation& pop, const DeParams& params,
                             const DynamicCostMatrix& costs, RandomStream& rng) {
    const std::size_t np = pop.members.size();
    const std::vector<TourIndividual> old = pop.members;

    for (std::size_t i = 0; i < np; ++i) {
        std::size_t r1, r2, r3;
        do { r1 = rng.uniform_index(np); } while (r1 == i);
        do { r2 = rng.uniform_index(np); } while (r2 == i || r2 == r1);
        do { r3 = rng.uniform_index(np); } while (r3 == i || r3 == r1 || r3 == r2);

        Tour mutant = old[r1].tour;
        for (const auto& op : subtract(old[r2].tour, old[r3].tour)) {
            if (rng.uniform01() < std::min(1.0, params.f)) apply_swap(mutant, op);
        }

        const SwapSequence diff = subtract(mutant, old[i].tour);
        SwapSequence chosen;
        for (const auto& op : diff) {
            if (rng.uniform01() < params.cr) chosen.push_back(op);
        }
        if (chosen.empty() && !diff.empty()) {
            chosen.push_back(diff[rng.uniform_index(diff.size())]);
        }

        Tour trial = applied(old[i].tour, chosen);
        const double c = tour_cost(trial, costs);
        if (c <= pop.members[i].cost) {
            pop.members[i].tour = std::move(trial);
            pop.members[i].cost = c;
        }
    }
    select_tour_leader(pop);
}

/// Discrete global-best PSO state: velocities are swap sequences.
struct TourPsoState {
    std::vector<SwapSequence> velocities;
    std::vector<TourIndividual> personal_best;
    TourIndividual global_best;

    static TourPsoState from_population(const TourPopulation& pop) {
        TourPsoState st;
        st.velocities.assign(pop.members.size(), {});
        st.personal_best = pop.members;
        st.global_best = pop.leader();
        return st;
    }
};

/// Discrete PSO sweep. The new velocity samples the old one (inertia) and
/// the decompositions toward the personal and global bests; its length is
/// capped at the city count, keeping the most recent operators.
inline void discrete_pso_step(TourPopulation& pop, TourPsoState& state, const PsoParams& params,
                              const DynamicCostMatrix& costs, RandomStream& rng) {
    const std::size_t cap = costs.size();

    for (std::size_t i = 0; i < pop.members.size(); ++i) {
        TourIndividual& ind = pop.members[i];
        SwapSequence next;
        for (const auto& op : state.velocities[i]) {
            if (rng.uniform01() < std::min(1.0, params.inertia)) next.push_back(op);
        }
        for (const auto& op : subtract(state.personal_best[i].tour, ind.tour)) {
            const double r = rng.uniform01();
            if (rng.uniform01() < std::min(1.0, params.cognitive * r)) next.push_back(op);
        }
        for (const auto& op : subtract(state.global_best.tour, ind.tour)) {
            const double r = rng.uniform01();
            if (rng.uniform01() < std::min(1.0, params.social * r)) next.push_back(op);
        }
        if (next.size() > cap) {
            next.erase(next.begin(), next.end() - static_cast<std::ptrdiff_t>(cap));
        }
        state.velocities[i] = next;
        ind.tour = applied(std::move(ind.tour), next);
        ind.cost = tour_cost(ind.tour, costs);
    }

    for (std::size_t i = 0; i < pop.members.size(); ++i) {
        if (pop.members[i].cost < state.personal_best[i].cost) {
            state.personal_best[i] = pop.members[i];
        }
        if (state.personal_best[i].cost < state.global_best.cost) {
            state.global_best = state.personal_best[i];
        }
    }
    select_tour_leader(pop);
}

/// Exhaustive exact solver for small instances. The first city is fixed and
/// the remainder enumerated depth-first in ascending index order with
/// partial-cost pruning, so the result is the minimum cost and, among ties,
/// the lexicographically smallest tour.
inline std::pair<Tour, double> brute_force_optimum(const DynamicCostMatrix& costs) {
    const std::size_t n = costs.size();
    if (n < 2) throw InstanceError("exact solver needs at least 2 cities");
    if (n > 12) {
        throw InstanceError("exact solver budget is 12 cities, got " + std::to_string(n));
    }

    Tour current(n);
    current[0] = 0;
    std::vector<bool> used(n, false);
    used[0] = true;
    Tour best_tour;
    double best_cost = std::numeric_limits<double>::infinity();

    auto dfs = [&](auto&& self, std::size_t depth, double partial) -> void {
        if (partial >= best_cost) return;  // all edges are >= 0
        if (depth == n) {
            const double total = partial + costs.cost(current.back(), current.front());
            if (total < best_cost) {
                best_cost = total;
                best_tour = current;
            }
            return;
        }
        for (std::size_t c = 1; c < n; ++c) {
            if (used[c]) continue;
            used[c] = true;
            current[depth] = static_cast<int>(c);
            self(self, depth + 1, partial + costs.cost(current[depth - 1], current[depth]));
            used[c] = false;
        }
    };
    dfs(dfs, 1, 0.0);
    return {best_tour, best_cost};
}

} // namespace osoma

#endif
