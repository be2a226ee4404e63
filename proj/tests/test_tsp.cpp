#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "osoma/cost_matrix.hpp"
#include "osoma/random.hpp"
#include "osoma/tsp.hpp"

using osoma::DynamicCostMatrix;
using osoma::RandomStream;
using osoma::Tour;
using osoma::TourPopulation;

namespace {

std::vector<std::string> make_ids(std::size_t n) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back("c" + std::to_string(i + 1));
    return ids;
}

DynamicCostMatrix random_symmetric(std::size_t n, std::uint64_t seed) {
    RandomStream rng(seed);
    std::vector<double> costs(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double c = std::floor(rng.uniform(10.0, 100.0));
            costs[i * n + j] = c;
            costs[j * n + i] = c;
        }
    }
    return DynamicCostMatrix(make_ids(n), costs);
}

DynamicCostMatrix random_asymmetric(std::size_t n, std::uint64_t seed) {
    RandomStream rng(seed);
    std::vector<double> costs(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) costs[i * n + j] = std::floor(rng.uniform(10.0, 100.0));
        }
    }
    return DynamicCostMatrix(make_ids(n), costs);
}

// Independent exact solver: dynamic program over visited subsets, fixing
// city 0 as the start. Used only to cross-check the search-based solver.
double held_karp_cost(const DynamicCostMatrix& m) {
    const std::size_t n = m.size();
    const std::size_t full = std::size_t(1) << n;
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> dp(full, std::vector<double>(n, inf));
    dp[1][0] = 0.0;
    for (std::size_t mask = 1; mask < full; ++mask) {
        if (!(mask & 1)) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (std::size_t(1) << j)) || dp[mask][j] == inf) continue;
            for (std::size_t k = 1; k < n; ++k) {
                if (mask & (std::size_t(1) << k)) continue;
                const std::size_t next = mask | (std::size_t(1) << k);
                const double cand = dp[mask][j] + m.cost(static_cast<int>(j), static_cast<int>(k));
                if (cand < dp[next][k]) dp[next][k] = cand;
            }
        }
    }
    double best = inf;
    for (std::size_t j = 1; j < n; ++j) {
        best = std::min(best, dp[full - 1][j] + m.cost(static_cast<int>(j), 0));
    }
    return best;
}

bool is_permutation_tour(const Tour& tour, std::size_t n) {
    if (tour.size() != n) return false;
    Tour sorted = tour;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i) {
        if (sorted[i] != static_cast<int>(i)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("tour cost closes the cycle and honors direction") {
    const DynamicCostMatrix m(make_ids(3), {0, 10, 30,
                                            15, 0, 20,
                                            25, 35, 0});
    REQUIRE(osoma::tour_cost({0, 1, 2}, m) == 10 + 20 + 25);
    REQUIRE(osoma::tour_cost({0, 2, 1}, m) == 30 + 35 + 15);
}

TEST_CASE("tour cost rejects tours that do not match the matrix") {
    const DynamicCostMatrix m(make_ids(3), {0, 1, 1, 1, 0, 1, 1, 1, 0});
    REQUIRE_THROWS_AS(osoma::tour_cost({0, 1}, m), osoma::InstanceError);
    REQUIRE_THROWS_AS(osoma::tour_cost({0, 1, 2, 3}, m), osoma::InstanceError);
    REQUIRE_THROWS_AS(osoma::tour_cost({0}, m), osoma::InstanceError);
}

TEST_CASE("initial tour population holds valid evaluated permutations") {
    const DynamicCostMatrix m = random_symmetric(6, 8);
    RandomStream rng(3);
    const TourPopulation pop = osoma::init_tour_population(m, 12, rng);
    REQUIRE(pop.size() == 12);
    for (const auto& ind : pop.members) {
        REQUIRE(is_permutation_tour(ind.tour, 6));
        REQUIRE(ind.cost == osoma::tour_cost(ind.tour, m));
    }
    REQUIRE(pop.leader_index < pop.size());
    for (const auto& ind : pop.members) {
        REQUIRE(pop.leader().cost <= ind.cost);
    }

    RandomStream rng2(3);
    const TourPopulation again = osoma::init_tour_population(m, 12, rng2);
    for (std::size_t i = 0; i < pop.size(); ++i) {
        REQUIRE(pop.members[i].tour == again.members[i].tour);
    }
}

TEST_CASE("tour population rejects degenerate sizes") {
    const DynamicCostMatrix m = random_symmetric(4, 1);
    RandomStream rng(1);
    REQUIRE_THROWS_AS(osoma::init_tour_population(m, 1, rng), osoma::ConfigError);
}

TEST_CASE("the exact solver agrees with full enumeration on small instances") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const DynamicCostMatrix m = random_asymmetric(5, seed);
        const auto [tour, cost] = osoma::brute_force_optimum(m);

        Tour probe{0, 1, 2, 3, 4};
        double best = std::numeric_limits<double>::infinity();
        do {
            best = std::min(best, osoma::tour_cost(probe, m));
        } while (std::next_permutation(probe.begin() + 1, probe.end()));
        REQUIRE(cost == best);
        REQUIRE(osoma::tour_cost(tour, m) == cost);
    }
}

TEST_CASE("the exact solver agrees with the subset dynamic program") {
    for (std::uint64_t seed : {4ULL, 5ULL}) {
        const DynamicCostMatrix m = random_symmetric(8, seed);
        const auto [tour, cost] = osoma::brute_force_optimum(m);
        REQUIRE(cost == held_karp_cost(m));
        REQUIRE(is_permutation_tour(tour, 8));
    }
    const DynamicCostMatrix m = random_asymmetric(8, 6);
    REQUIRE(osoma::brute_force_optimum(m).second == held_karp_cost(m));
}

TEST_CASE("the exact solver breaks cost ties toward the smallest tour") {
    // All edges equal: every tour costs the same, so the solver must return
    // the identity order.
    const std::size_t n = 5;
    std::vector<double> costs(n * n, 7.0);
    for (std::size_t i = 0; i < n; ++i) costs[i * n + i] = 0.0;
    const DynamicCostMatrix m(make_ids(n), costs);
    const auto [tour, cost] = osoma::brute_force_optimum(m);
    REQUIRE(tour == Tour{0, 1, 2, 3, 4});
    REQUIRE(cost == 7.0 * n);
}

TEST_CASE("the exact solver enforces its size budget") {
    const DynamicCostMatrix big = random_symmetric(13, 2);
    REQUIRE_THROWS_AS(osoma::brute_force_optimum(big), osoma::InstanceError);
}

TEST_CASE("discrete migration only ever improves a member") {
    const DynamicCostMatrix m = random_symmetric(8, 11);
    RandomStream rng(9);
    TourPopulation pop = osoma::init_tour_population(m, 15, rng);
    const osoma::SomaParams params;
    for (int it = 0; it < 20; ++it) {
        const std::vector<osoma::TourIndividual> before = pop.members;
        osoma::discrete_osoma_migrate(pop, params, m, rng);
        for (std::size_t i = 0; i < pop.size(); ++i) {
            REQUIRE(pop.members[i].cost <= before[i].cost);
            REQUIRE(is_permutation_tour(pop.members[i].tour, 8));
            REQUIRE(pop.members[i].cost == osoma::tour_cost(pop.members[i].tour, m));
        }
    }
}

TEST_CASE("discrete migration is seed-deterministic") {
    const DynamicCostMatrix m = random_symmetric(7, 12);
    const osoma::SomaParams params;
    TourPopulation a, b;
    {
        RandomStream rng(21);
        a = osoma::init_tour_population(m, 10, rng);
        for (int it = 0; it < 15; ++it) osoma::discrete_osoma_migrate(a, params, m, rng);
    }
    {
        RandomStream rng(21);
        b = osoma::init_tour_population(m, 10, rng);
        for (int it = 0; it < 15; ++it) osoma::discrete_osoma_migrate(b, params, m, rng);
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a.members[i].tour == b.members[i].tour);
    }
}

TEST_CASE("both discrete migration variants find a small optimum") {
    const DynamicCostMatrix m = random_symmetric(7, 13);
    const double optimum = osoma::brute_force_optimum(m).second;
    const osoma::SomaParams params;

    int osoma_hits = 0, soma_hits = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        RandomStream rng_a(seed);
        TourPopulation pop_a = osoma::init_tour_population(m, 20, rng_a);
        for (int it = 0; it < 80; ++it) osoma::discrete_osoma_migrate(pop_a, params, m, rng_a);
        if (pop_a.leader().cost == optimum) ++osoma_hits;

        RandomStream rng_b(seed);
        TourPopulation pop_b = osoma::init_tour_population(m, 20, rng_b);
        for (int it = 0; it < 80; ++it) osoma::discrete_soma_migrate(pop_b, params, m, rng_b);
        if (pop_b.leader().cost == optimum) ++soma_hits;
    }
    REQUIRE(osoma_hits >= 4);
    REQUIRE(soma_hits >= 1);
}

TEST_CASE("discrete de never worsens a member and keeps tours valid") {
    const DynamicCostMatrix m = random_asymmetric(8, 14);
    RandomStream rng(15);
    TourPopulation pop = osoma::init_tour_population(m, 15, rng);
    const osoma::DeParams params;
    for (int g = 0; g < 25; ++g) {
        const std::vector<osoma::TourIndividual> before = pop.members;
        osoma::discrete_de_step(pop, params, m, rng);
        for (std::size_t i = 0; i < pop.size(); ++i) {
            REQUIRE(pop.members[i].cost <= before[i].cost);
            REQUIRE(is_permutation_tour(pop.members[i].tour, 8));
        }
    }
}

TEST_CASE("discrete pso tracks a monotone global best with capped velocities") {
    const DynamicCostMatrix m = random_symmetric(8, 16);
    RandomStream rng(17);
    TourPopulation pop = osoma::init_tour_population(m, 15, rng);
    osoma::TourPsoState state = osoma::TourPsoState::from_population(pop);
    const osoma::PsoParams params;
    double previous = state.global_best.cost;
    for (int g = 0; g < 40; ++g) {
        osoma::discrete_pso_step(pop, state, params, m, rng);
        REQUIRE(state.global_best.cost <= previous);
        previous = state.global_best.cost;
        for (std::size_t i = 0; i < pop.size(); ++i) {
            REQUIRE(is_permutation_tour(pop.members[i].tour, 8));
            REQUIRE(state.velocities[i].size() <= m.size());
        }
    }
    REQUIRE(state.global_best.cost == osoma::tour_cost(state.global_best.tour, m));
}
