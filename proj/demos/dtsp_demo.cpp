// Generates a small euclidean instance, perturbs it mid-run with a price
// spike and a new city, and shows how the tour population reacts.

#include <cstdio>

#include "osoma/osoma.hpp"

int main() {
    const osoma::TspInstance instance =
        osoma::generate_instance(9, 42, osoma::InstanceStyle::Euclidean);
    const auto& ids = instance.matrix.city_ids();

    osoma::EventSchedule schedule;
    {
        osoma::Event spike;
        spike.at_iteration = 15;
        osoma::UpdateEdgesEvent upd;
        upd.edges.push_back({ids[0], ids[1], instance.matrix.cost(0, 1) * 4.0});
        upd.edges.push_back({ids[1], ids[0], instance.matrix.cost(1, 0) * 4.0});
        spike.payload = upd;
        schedule.events.push_back(spike);

        osoma::Event newcomer;
        newcomer.at_iteration = 30;
        osoma::AddCityEvent add;
        add.id = "c10";
        add.label = "City 10";
        for (std::size_t j = 0; j < ids.size(); ++j) {
            add.costs_from_new.push_back(30000.0 + 1000.0 * static_cast<double>(j));
            add.costs_to_new.push_back(30000.0 + 1000.0 * static_cast<double>(j));
        }
        newcomer.payload = add;
        schedule.events.push_back(newcomer);
    }

    const osoma::ReplayProvider provider(instance.matrix, schedule);
    osoma::DtspConfig config;
    const osoma::SimulationResult result =
        osoma::simulate(provider, osoma::Algorithm::Osoma, config, 3);

    std::printf("%-10s %-14s %s\n", "loop", "best cost", "event");
    for (const auto& step : result.history) {
        if (step.iteration % 5 == 0 || !step.event.empty()) {
            std::printf("%-10zu %-14.0f %s\n", step.iteration, step.best_cost,
                        step.event.c_str());
        }
    }
    std::printf("final tour:");
    for (const auto& id : result.final_tour) std::printf(" %s", id.c_str());
    std::printf("  (cost %.0f)\n", result.final_cost);
    return 0;
}
