#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "osoma/baselines.hpp"
#include "osoma/benchmarks.hpp"
#include "osoma/runner.hpp"
#include "osoma/soma.hpp"

using Catch::Matchers::WithinAbs;
using osoma::Algorithm;
using osoma::ConfigError;
using osoma::DeParams;
using osoma::Population;
using osoma::PsoParams;
using osoma::PsoState;
using osoma::RandomStream;
using osoma::RealVector;
using osoma::RunConfig;
using osoma::RunResult;
using osoma::SearchSpace;
using osoma::SomaParams;

namespace {

double sphere(const RealVector& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

Population two_agent_population() {
    Population pop;
    pop.members = {{{0.0, 0.0}, 0.0}, {{1.0, 1.0}, 2.0}};
    osoma::select_leader(pop);
    return pop;
}

} // namespace

TEST_CASE("soma params validation") {
    SomaParams p;
    REQUIRE_NOTHROW(p.validate());
    p.step = 0.0;
    REQUIRE_THROWS_AS(p.validate(), ConfigError);
    p = SomaParams{};
    p.step = 4.0;  // larger than path_length
    REQUIRE_THROWS_AS(p.validate(), ConfigError);
    p = SomaParams{};
    p.pr = 1.5;
    REQUIRE_THROWS_AS(p.validate(), ConfigError);
    p = SomaParams{};
    p.lambda_low = 0.9;  // above lambda_high
    REQUIRE_THROWS_AS(p.validate(), ConfigError);
    p = SomaParams{};
    p.lambda_high = 1.0;
    REQUIRE_THROWS_AS(p.validate(), ConfigError);
}

TEST_CASE("path grid counts candidates up to the path length") {
    SomaParams p;
    REQUIRE(p.path_point_count() == 27);  // 3.0 / 0.11
    p.path_length = 1.5;
    p.step = 0.5;
    REQUIRE(p.path_point_count() == 3);
    p.path_length = 1.0;
    p.step = 1.0;
    REQUIRE(p.path_point_count() == 1);
    // 0.6 / 0.2 lands just below 3 in floating point; the grid still has 3 points.
    p.path_length = 0.6;
    p.step = 0.2;
    REQUIRE(p.path_point_count() == 3);
}

TEST_CASE("migration walks the path grid and keeps the best candidate") {
    // Leader at the origin, follower at (1,1), always-perturbed components.
    // Candidates sit at (1-L)(1,1) for L in {0.5, 1.0, 1.5}; the middle one
    // hits the optimum exactly.
    Population pop = two_agent_population();
    SomaParams p;
    p.path_length = 1.5;
    p.step = 0.5;
    p.pr = 1.0;
    RandomStream rng(99);
    osoma::soma_migrate(pop, p, SearchSpace::cube(-5.12, 5.12, 2), sphere, rng);

    REQUIRE(pop.members[1].position == RealVector{0.0, 0.0});
    REQUIRE(pop.members[1].fitness == 0.0);
    REQUIRE(pop.leader_index == 0);  // tie resolves to the lowest index
}

TEST_CASE("migration leaves the follower alone when no candidate improves") {
    Population pop = two_agent_population();
    // One candidate at L = 2: the follower jumps across the leader to
    // (-1,-1), which is no better, so it must stay where it was.
    SomaParams p;
    p.path_length = 2.0;
    p.step = 2.0;
    p.pr = 1.0;
    RandomStream rng(4);
    osoma::soma_migrate(pop, p, SearchSpace::cube(-5.12, 5.12, 2), sphere, rng);

    REQUIRE(pop.members[1].position == RealVector{1.0, 1.0});
    REQUIRE(pop.members[1].fitness == 2.0);
}

TEST_CASE("opportunistic migration scales the move by lambda over dimension") {
    // PR = 0 and a collapsed lambda interval make the step exactly
    // lambda/d = 0.4, so the follower lands at (0.6, 0.6).
    Population pop = two_agent_population();
    SomaParams p;
    p.path_length = 1.0;
    p.step = 1.0;
    p.pr = 0.0;
    p.lambda_low = 0.8;
    p.lambda_high = 0.8;
    RandomStream rng(7);
    osoma::osoma_migrate(pop, p, SearchSpace::cube(-5.12, 5.12, 2), sphere, rng);

    REQUIRE_THAT(pop.members[1].position[0], WithinAbs(0.6, 1e-15));
    REQUIRE_THAT(pop.members[1].position[1], WithinAbs(0.6, 1e-15));
    REQUIRE_THAT(pop.members[1].fitness, WithinAbs(0.72, 1e-15));
}

TEST_CASE("plain perturbation components are binary with frequency pr") {
    SomaParams p;
    p.pr = 0.3;
    RandomStream rng(21);
    std::size_t ones = 0;
    const std::size_t total = 100000;
    for (std::size_t i = 0; i < total / 10; ++i) {
        const RealVector phi = osoma::soma_perturbation(10, p, rng);
        for (double v : phi) {
            REQUIRE((v == 0.0 || v == 1.0));
            if (v == 1.0) ++ones;
        }
    }
    REQUIRE_THAT(static_cast<double>(ones) / total, WithinAbs(0.3, 0.01));
}

TEST_CASE("opportunistic perturbation is never zero") {
    SomaParams p;
    p.pr = 0.1;
    RandomStream rng(22);
    for (int i = 0; i < 1000; ++i) {
        for (double v : osoma::osoma_perturbation(5, p, rng)) {
            REQUIRE(v > 0.0);
        }
    }
}

TEST_CASE("opportunistic components concentrate at the perturbation rate") {
    SomaParams p;
    p.pr = 0.5;
    RandomStream rng(23);
    const RealVector phi = osoma::osoma_perturbation(10000, p, rng);
    const auto ones = std::count(phi.begin(), phi.end(), 1.0);
    REQUIRE_THAT(static_cast<double>(ones) / 10000.0, WithinAbs(0.5, 0.02));
}

TEST_CASE("non-perturbed components follow lambda over dimension at d = 5") {
    SomaParams p;
    p.pr = 0.0;
    RandomStream rng(24);
    double sum = 0.0;
    double lo = 1.0, hi = 0.0;
    const std::size_t total = 100000;
    for (std::size_t i = 0; i < total / 5; ++i) {
        for (double v : osoma::osoma_perturbation(5, p, rng)) {
            sum += v;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    REQUIRE_THAT(sum / static_cast<double>(total), WithinAbs(0.145, 0.005));
    REQUIRE(lo >= 0.12);
    REQUIRE(hi < 0.17);
}

TEST_CASE("non-perturbed magnitude shrinks with dimension") {
    SomaParams p;
    p.pr = 0.0;
    double previous = 1.0;
    for (std::size_t d : {2, 5, 10, 50}) {
        RandomStream rng(25);
        double sum = 0.0;
        std::size_t count = 0;
        while (count < 20000) {
            for (double v : osoma::osoma_perturbation(d, p, rng)) {
                sum += v;
                ++count;
            }
        }
        const double mean = sum / static_cast<double>(count);
        REQUIRE_THAT(mean, WithinAbs(0.725 / static_cast<double>(d), 0.002));
        REQUIRE(mean < previous);
        previous = mean;
    }
}

TEST_CASE("with a collapsed zero lambda interval both variants walk identically") {
    const SearchSpace space = SearchSpace::cube(-5.12, 5.12, 2);
    SomaParams p;
    p.lambda_low = 0.0;
    p.lambda_high = 0.0;  // opportunistic fallback becomes 0, same as plain

    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        RandomStream rng_a(seed), rng_b(seed);
        Population a = osoma::init_population(space, 10, sphere, rng_a);
        Population b = osoma::init_population(space, 10, sphere, rng_b);
        for (int it = 0; it < 20; ++it) {
            osoma::soma_migrate(a, p, space, sphere, rng_a);
            osoma::osoma_migrate(b, p, space, sphere, rng_b);
            for (std::size_t i = 0; i < a.size(); ++i) {
                REQUIRE(a.members[i].position == b.members[i].position);
                REQUIRE(a.members[i].fitness == b.members[i].fitness);
            }
        }
    }
}

TEST_CASE("de and pso params validation") {
    DeParams de;
    REQUIRE_NOTHROW(de.validate());
    de.f = 0.0;
    REQUIRE_THROWS_AS(de.validate(), ConfigError);
    de = DeParams{};
    de.cr = -0.1;
    REQUIRE_THROWS_AS(de.validate(), ConfigError);

    PsoParams pso;
    REQUIRE_NOTHROW(pso.validate());
    pso.inertia = -0.1;
    REQUIRE_THROWS_AS(pso.validate(), ConfigError);
    pso = PsoParams{};
    pso.social = -1.0;
    REQUIRE_THROWS_AS(pso.validate(), ConfigError);
}

TEST_CASE("de generations never worsen a member and respect the bounds") {
    const SearchSpace space = SearchSpace::cube(-5.12, 5.12, 5);
    RandomStream rng(31);
    Population pop = osoma::init_population(space, 20, sphere, rng);
    const DeParams params;
    for (int g = 0; g < 10; ++g) {
        const std::vector<osoma::Individual> before = pop.members;
        osoma::de_step(pop, params, space, sphere, rng);
        for (std::size_t i = 0; i < pop.size(); ++i) {
            REQUIRE(pop.members[i].fitness <= before[i].fitness);
            REQUIRE(space.contains(pop.members[i].position));
            REQUIRE(pop.members[i].fitness == sphere(pop.members[i].position));
        }
    }
}

TEST_CASE("de closes in on the sphere optimum") {
    const SearchSpace space = SearchSpace::cube(-5.12, 5.12, 5);
    RandomStream rng(1);
    Population pop = osoma::init_population(space, 30, sphere, rng);
    const DeParams params;
    for (int g = 0; g < 150; ++g) osoma::de_step(pop, params, space, sphere, rng);
    REQUIRE(pop.leader().fitness < 1e-4);
}

TEST_CASE("pso keeps its global best monotone and inside the bounds") {
    const SearchSpace space = SearchSpace::cube(-32.0, 32.0, 5);
    const auto& ackley = osoma::benchmark_by_name("ackley");
    RandomStream rng(32);
    Population pop = osoma::init_population(space, 20, ackley.objective, rng);
    PsoState state = PsoState::from_population(pop);
    const PsoParams params;
    double previous = state.global_best.fitness;
    for (int g = 0; g < 100; ++g) {
        osoma::pso_step(pop, state, params, space, ackley.objective, rng);
        REQUIRE(state.global_best.fitness <= previous);
        previous = state.global_best.fitness;
        for (const auto& ind : pop.members) REQUIRE(space.contains(ind.position));
    }
}

TEST_CASE("pso closes in on the sphere optimum") {
    const SearchSpace space = SearchSpace::cube(-5.12, 5.12, 5);
    RandomStream rng(2);
    Population pop = osoma::init_population(space, 30, sphere, rng);
    PsoState state = PsoState::from_population(pop);
    const PsoParams params;
    for (int g = 0; g < 200; ++g) osoma::pso_step(pop, state, params, space, sphere, rng);
    REQUIRE(state.global_best.fitness < 1e-4);
}

TEST_CASE("algorithm names round-trip and unknown names are rejected") {
    for (Algorithm a : {Algorithm::Soma, Algorithm::Osoma, Algorithm::De, Algorithm::Pso}) {
        REQUIRE(osoma::algorithm_from_name(osoma::algorithm_name(a)) == a);
    }
    REQUIRE_THROWS_AS(osoma::algorithm_from_name("cmaes"), ConfigError);
    REQUIRE_THROWS_AS(osoma::algorithm_from_name(""), ConfigError);
}

TEST_CASE("runs produce a complete, non-increasing history") {
    const auto& ackley = osoma::benchmark_by_name("ackley");
    const SearchSpace space = ackley.space(3);
    RunConfig config;
    config.max_iterations = 50;
    for (Algorithm a : {Algorithm::Soma, Algorithm::Osoma, Algorithm::De, Algorithm::Pso}) {
        const RunResult result = osoma::run(a, ackley.objective, space, config, 5);
        REQUIRE(result.history.size() == 51);
        REQUIRE(result.history.front().first == 0);
        REQUIRE(result.history.back().first == 50);
        for (std::size_t i = 1; i < result.history.size(); ++i) {
            REQUIRE(result.history[i].second <= result.history[i - 1].second);
        }
        REQUIRE(result.best_fitness == result.history.back().second);
        REQUIRE(ackley.objective(result.best_position) == result.best_fitness);
    }
}

TEST_CASE("a reached target stops the run early") {
    RunConfig config;
    config.max_iterations = 100;
    config.target_fitness = 1e-2;
    const SearchSpace space = SearchSpace::cube(-5.12, 5.12, 2);
    const RunResult result = osoma::run(Algorithm::Osoma, sphere, space, config, 3);
    REQUIRE(result.best_fitness <= 1e-2);
    REQUIRE(result.iterations() < 100);
    REQUIRE(result.history.size() == result.iterations() + 1);
}

TEST_CASE("identical runs reproduce bitwise") {
    const auto& fn = osoma::benchmark_by_name("qing");
    RunConfig config;
    config.max_iterations = 30;
    const RunResult a = osoma::run(Algorithm::Osoma, fn.objective, fn.space(4), config, 17);
    const RunResult b = osoma::run(Algorithm::Osoma, fn.objective, fn.space(4), config, 17);
    REQUIRE(a.history == b.history);
    REQUIRE(a.best_position == b.best_position);
    REQUIRE(a.best_fitness == b.best_fitness);
}

TEST_CASE("opportunistic migration is at least as strong as plain on the sphere") {
    const SearchSpace space = SearchSpace::cube(-5.12, 5.12, 2);
    RunConfig config;
    config.max_iterations = 50;
    std::vector<double> soma_finals, osoma_finals;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        soma_finals.push_back(osoma::run(Algorithm::Soma, sphere, space, config, seed).best_fitness);
        osoma_finals.push_back(
            osoma::run(Algorithm::Osoma, sphere, space, config, seed).best_fitness);
    }
    std::sort(soma_finals.begin(), soma_finals.end());
    std::sort(osoma_finals.begin(), osoma_finals.end());
    const double soma_median = (soma_finals[14] + soma_finals[15]) / 2.0;
    const double osoma_median = (osoma_finals[14] + osoma_finals[15]) / 2.0;
    REQUIRE(osoma_median <= soma_median);
}
