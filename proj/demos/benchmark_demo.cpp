// Runs the two migration variants head to head on one benchmark function
// and prints the best fitness every few migration loops.

#include <cstdio>

#include "osoma/osoma.hpp"

int main() {
    const osoma::BenchmarkFunction& function = osoma::benchmark_by_name("ackley");
    const osoma::SearchSpace space = function.space(10);

    osoma::RunConfig config;
    config.max_iterations = 100;

    const std::uint64_t seed = 7;
    const osoma::RunResult classic =
        osoma::run(osoma::Algorithm::Soma, function.objective, space, config, seed);
    const osoma::RunResult opportunistic =
        osoma::run(osoma::Algorithm::Osoma, function.objective, space, config, seed);

    std::printf("%-10s %-16s %-16s\n", "loop", "classic", "opportunistic");
    for (std::size_t i = 0; i < classic.history.size(); i += 10) {
        std::printf("%-10zu %-16.6g %-16.6g\n", classic.history[i].first,
                    classic.history[i].second, opportunistic.history[i].second);
    }
    std::printf("final      %-16.6g %-16.6g\n", classic.best_fitness,
                opportunistic.best_fitness);
    return 0;
}
