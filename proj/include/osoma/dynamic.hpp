#ifndef OSOMA_DYNAMIC_HPP
#define OSOMA_DYNAMIC_HPP

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "osoma/cost_matrix.hpp"
#include "osoma/errors.hpp"
#include "osoma/runner.hpp"
#include "osoma/tsp.hpp"

namespace osoma {

/// A city joining the network, with its full cost row and column against
/// the cities present at that moment (in current city order).
struct AddCityEvent {
    std::string id;
    std::string label;
    std::vector<double> costs_from_new;  // new -> existing
    std::vector<double> costs_to_new;    // existing -> new
};

struct EdgeUpdate {
    std::string from;
    std::string to;
    double cost = 0.0;
};

struct UpdateEdgesEvent {
    std::vector<EdgeUpdate> edges;
};

/// One timed change of the cost model. Time is measured in migration loops.
struct Event {
    std::size_t at_iteration = 0;
    std::variant<AddCityEvent, UpdateEdgesEvent> payload;

    const char* kind_name() const {
        return std::holds_alternative<AddCityEvent>(payload) ? "add_city" : "update_edges";
    }
};

/// Applies one event in place. Add-city grows the matrix by one fully
/// connected city; edge updates replace exactly the listed entries.
inline void apply_event(DynamicCostMatrix& matrix, const Event& event) {
    if (const auto* add = std::get_if<AddCityEvent>(&event.payload)) {
        matrix.add_city(add->id, add->costs_from_new, add->costs_to_new);
        return;
    }
    const auto& upd = std::get<UpdateEdgesEvent>(event.payload);
    for (const auto& e : upd.edges) {
        const int from = matrix.index_of(e.from);
        const int to = matrix.index_of(e.to);
        if (from < 0 || to < 0) {
            throw InstanceError("edge update references unknown city: " + e.from + " -> " + e.to);
        }
        if (from == to) {
            throw InstanceError("edge update must reference two distinct cities, got " + e.from);
        }
        matrix.set_cost(from, to, e.cost);
    }
}

/// Sorted event list; at most one add-city event per iteration tick.
struct EventSchedule {
    std::vector<Event> events;

    std::vector<Event> at(std::size_t t) const {
        std::vector<Event> out;
        for (const auto& ev : events) {
            if (ev.at_iteration == t) out.push_back(ev);
        }
        return out;
    }

    /// Structural checks plus a dry replay against the instance's city set.
    /// Everything is rejected here, before any optimization starts.
    void validate_against(const DynamicCostMatrix& base) const {
        std::size_t prev = 0;
        std::set<std::size_t> add_ticks;
        for (std::size_t idx = 0; idx < events.size(); ++idx) {
            const Event& ev = events[idx];
            if (idx > 0 && ev.at_iteration < prev) {
                throw ValidationError("events[" + std::to_string(idx) +
                                      "] is out of order (at=" + std::to_string(ev.at_iteration) +
                                      ")");
            }
            prev = ev.at_iteration;
            if (std::holds_alternative<AddCityEvent>(ev.payload) &&
                !add_ticks.insert(ev.at_iteration).second) {
                throw ValidationError("events[" + std::to_string(idx) +
                                      "]: more than one add_city at iteration " +
                                      std::to_string(ev.at_iteration));
            }
        }

        DynamicCostMatrix replay = base;
        for (std::size_t idx = 0; idx < events.size(); ++idx) {
            try {
                apply_event(replay, events[idx]);
            } catch (const Error& err) {
                throw ValidationError("events[" + std::to_string(idx) + "]: " + err.what());
            }
        }
    }
};

/// Source of the time-varying cost model. Implementations must be
/// deterministic: the same construction yields the same event stream, and
/// costs are constant between events.
class CostProvider {
public:
    virtual ~CostProvider() = default;
    virtual const DynamicCostMatrix& initial() const = 0;
    virtual std::vector<Event> pending_events(std::size_t t) const = 0;
    virtual double cost(const std::string& from, const std::string& to, std::size_t t) const = 0;
};

/// Replays a fixed instance plus schedule. This is the stand-in seam for a
/// live traffic feed: anything that can produce a matrix and timed events
/// can sit behind the same interface.
class ReplayProvider : public CostProvider {
public:
    ReplayProvider(DynamicCostMatrix base, EventSchedule schedule)
        : base_(std::move(base)), schedule_(std::move(schedule)) {
        schedule_.validate_against(base_);
    }

    const DynamicCostMatrix& initial() const override { return base_; }

    std::vector<Event> pending_events(std::size_t t) const override { return schedule_.at(t); }

    double cost(const std::string& from, const std::string& to, std::size_t t) const override {
        DynamicCostMatrix m = base_;
        for (const auto& ev : schedule_.events) {
            if (ev.at_iteration > t) break;
            apply_event(m, ev);
        }
        const int f = m.index_of(from);
        const int g = m.index_of(to);
        if (f < 0 || g < 0) {
            throw InstanceError("unknown city in cost query: " + from + " -> " + to);
        }
        return m.cost(f, g);
    }

    const EventSchedule& schedule() const { return schedule_; }

private:
    DynamicCostMatrix base_;
    EventSchedule schedule_;
};

/// Seeded multiplicative noise over a fixed base matrix: every `period`
/// iterations each edge cost is rescaled by a factor drawn from
/// U(1 - amplitude, 1 + amplitude). Factors depend only on (seed, tick).
class SyntheticProvider : public CostProvider {
public:
    SyntheticProvider(DynamicCostMatrix base, std::uint64_t seed, std::size_t period,
                      double amplitude)
        : base_(std::move(base)), seed_(seed), period_(period), amplitude_(amplitude) {
        if (period_ == 0) throw ConfigError("synthetic provider period must be positive");
        if (amplitude_ < 0.0 || amplitude_ >= 1.0) {
            throw ConfigError("synthetic provider amplitude must lie in [0, 1)");
        }
    }

    const DynamicCostMatrix& initial() const override { return base_; }

    std::vector<Event> pending_events(std::size_t t) const override {
        if (t == 0 || t % period_ != 0) return {};
        Event ev;
        ev.at_iteration = t;
        UpdateEdgesEvent upd;
        RandomStream rng(RandomStream::mix(seed_ ^ static_cast<std::uint64_t>(t)));
        const auto& ids = base_.city_ids();
        for (std::size_t i = 0; i < ids.size(); ++i) {
            for (std::size_t j = 0; j < ids.size(); ++j) {
                if (i == j) continue;
                const double factor = rng.uniform(1.0 - amplitude_, 1.0 + amplitude_);
                const double c = base_.cost(static_cast<int>(i), static_cast<int>(j)) * factor;
                upd.edges.push_back({ids[i], ids[j], c});
            }
        }
        ev.payload = std::move(upd);
        return {ev};
    }

    double cost(const std::string& from, const std::string& to, std::size_t t) const override {
        const int f = base_.index_of(from);
        const int g = base_.index_of(to);
        if (f < 0 || g < 0) {
            throw InstanceError("unknown city in cost query: " + from + " -> " + to);
        }
        const std::size_t epoch_tick = (t / period_) * period_;
        if (epoch_tick == 0) return base_.cost(f, g);
        RandomStream rng(RandomStream::mix(seed_ ^ static_cast<std::uint64_t>(epoch_tick)));
        double value = base_.cost(f, g);
        const std::size_t n = base_.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                const double factor = rng.uniform(1.0 - amplitude_, 1.0 + amplitude_);
                if (static_cast<int>(i) == f && static_cast<int>(j) == g) {
                    value = base_.cost(f, g) * factor;
                }
            }
        }
        return value;
    }

private:
    DynamicCostMatrix base_;
    std::uint64_t seed_;
    std::size_t period_;
    double amplitude_;
};

/// Inserts `city` into `tour` at the position with the smallest closed-cycle
/// cost increase; ties go to the earliest position.
inline void insert_cheapest(Tour& tour, int city, const DynamicCostMatrix& costs) {
    const std::size_t len = tour.size();
    std::size_t best_pos = 0;
    double best_delta = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < len; ++k) {
        const int a = tour[k];
        const int b = tour[(k + 1) % len];
        const double delta = costs.cost(a, city) + costs.cost(city, b) - costs.cost(a, b);
        if (delta < best_delta) {
            best_delta = delta;
            best_pos = k + 1;
        }
    }
    tour.insert(tour.begin() + static_cast<std::ptrdiff_t>(best_pos), city);
}

/// Absorbs a newly added city into every tour by cheapest insertion, then
/// re-evaluates and re-selects the leader.
inline void repair_population(TourPopulation& pop, int new_city, const DynamicCostMatrix& costs) {
    if (new_city < 0 || static_cast<std::size_t>(new_city) >= costs.size()) {
        throw InstanceError("repair: city index " + std::to_string(new_city) +
                            " not present in the cost matrix");
    }
    for (const auto& ind : pop.members) {
        if (std::find(ind.tour.begin(), ind.tour.end(), new_city) != ind.tour.end()) {
            throw InstanceError("repair: city " + costs.id_of(new_city) +
                                " already present in a tour");
        }
    }
    for (auto& ind : pop.members) {
        insert_cheapest(ind.tour, new_city, costs);
        ind.cost = tour_cost(ind.tour, costs);
    }
    select_tour_leader(pop);
}

/// One discrete optimizer driving a tour population through a changing cost
/// model. `best()` is non-increasing between events for every variant.
class TourOptimizer {
public:
    virtual ~TourOptimizer() = default;
    virtual void step(const DynamicCostMatrix& costs, RandomStream& rng) = 0;
    virtual void reevaluate(const DynamicCostMatrix& costs) = 0;
    virtual void absorb_city(int city, const DynamicCostMatrix& costs) = 0;
    virtual void reinit(const DynamicCostMatrix& costs, RandomStream& rng) = 0;
    virtual const TourIndividual& best() const = 0;
    virtual const TourPopulation& population() const = 0;
};

namespace detail {

class MigrationTourOptimizer : public TourOptimizer {
public:
    MigrationTourOptimizer(bool opportunistic, SomaParams params, const DynamicCostMatrix& costs,
                           std::size_t size, RandomStream& rng)
        : opportunistic_(opportunistic), params_(params),
          pop_(init_tour_population(costs, size, rng)) {}

    void step(const DynamicCostMatrix& costs, RandomStream& rng) override {
        tour_migrate(pop_, params_, costs, rng, opportunistic_);
    }

    void reevaluate(const DynamicCostMatrix& costs) override {
        for (auto& ind : pop_.members) ind.cost = tour_cost(ind.tour, costs);
        select_tour_leader(pop_);
    }

    void absorb_city(int city, const DynamicCostMatrix& costs) override {
        repair_population(pop_, city, costs);
    }

    void reinit(const DynamicCostMatrix& costs, RandomStream& rng) override {
        pop_ = init_tour_population(costs, pop_.size(), rng);
    }

    const TourIndividual& best() const override { return pop_.leader(); }
    const TourPopulation& population() const override { return pop_; }

private:
    bool opportunistic_;
    SomaParams params_;
    TourPopulation pop_;
};

class DeTourOptimizer : public TourOptimizer {
public:
    DeTourOptimizer(DeParams params, const DynamicCostMatrix& costs, std::size_t size,
                    RandomStream& rng)
        : params_(params), pop_(init_tour_population(costs, size, rng)) {}

    void step(const DynamicCostMatrix& costs, RandomStream& rng) override {
        discrete_de_step(pop_, params_, costs, rng);
    }

    void reevaluate(const DynamicCostMatrix& costs) override {
        for (auto& ind : pop_.members) ind.cost = tour_cost(ind.tour, costs);
        select_tour_leader(pop_);
    }

    void absorb_city(int city, const DynamicCostMatrix& costs) override {
        repair_population(pop_, city, costs);
    }

    void reinit(const DynamicCostMatrix& costs, RandomStream& rng) override {
        pop_ = init_tour_population(costs, pop_.size(), rng);
    }

    const TourIndividual& best() const override { return pop_.leader(); }
    const TourPopulation& population() const override { return pop_; }

private:
    DeParams params_;
    TourPopulation pop_;
};

class PsoTourOptimizer : public TourOptimizer {
public:
    PsoTourOptimizer(PsoParams params, const DynamicCostMatrix& costs, std::size_t size,
                     RandomStream& rng)
        : params_(params), pop_(init_tour_population(costs, size, rng)),
          state_(TourPsoState::from_population(pop_)) {}

    void step(const DynamicCostMatrix& costs, RandomStream& rng) override {
        discrete_pso_step(pop_, state_, params_, costs, rng);
    }

    void reevaluate(const DynamicCostMatrix& costs) override {
        for (auto& ind : pop_.members) ind.cost = tour_cost(ind.tour, costs);
        select_tour_leader(pop_);
        refresh_memory(costs);
    }

    void absorb_city(int city, const DynamicCostMatrix& costs) override {
        repair_population(pop_, city, costs);
        for (auto& pb : state_.personal_best) {
            insert_cheapest(pb.tour, city, costs);
        }
        insert_cheapest(state_.global_best.tour, city, costs);
        refresh_memory(costs);
    }

    void reinit(const DynamicCostMatrix& costs, RandomStream& rng) override {
        pop_ = init_tour_population(costs, pop_.size(), rng);
        state_ = TourPsoState::from_population(pop_);
    }

    const TourIndividual& best() const override { return state_.global_best; }
    const TourPopulation& population() const override { return pop_; }

private:
    // Memories keep their tours but their costs are stale after any cost
    // change; the current member may now beat its old personal best.
    void refresh_memory(const DynamicCostMatrix& costs) {
        for (std::size_t i = 0; i < state_.personal_best.size(); ++i) {
            state_.personal_best[i].cost = tour_cost(state_.personal_best[i].tour, costs);
            if (pop_.members[i].cost < state_.personal_best[i].cost) {
                state_.personal_best[i] = pop_.members[i];
            }
        }
        state_.global_best.cost = tour_cost(state_.global_best.tour, costs);
        for (const auto& pb : state_.personal_best) {
            if (pb.cost < state_.global_best.cost) state_.global_best = pb;
        }
    }

    PsoParams params_;
    TourPopulation pop_;
    TourPsoState state_;
};

} // namespace detail

struct DtspConfig {
    std::size_t population_size = 20;
    std::size_t iterations = 60;
    bool reinit_on_event = false;
    SomaParams soma;
    DeParams de;
    PsoParams pso;
};

inline std::unique_ptr<TourOptimizer> make_tour_optimizer(Algorithm algorithm,
                                                          const DtspConfig& config,
                                                          const DynamicCostMatrix& costs,
                                                          RandomStream& rng) {
    switch (algorithm) {
        case Algorithm::Soma:
            return std::make_unique<detail::MigrationTourOptimizer>(false, config.soma, costs,
                                                                    config.population_size, rng);
        case Algorithm::Osoma:
            return std::make_unique<detail::MigrationTourOptimizer>(true, config.soma, costs,
                                                                    config.population_size, rng);
        case Algorithm::De:
            return std::make_unique<detail::DeTourOptimizer>(config.de, costs,
                                                             config.population_size, rng);
        case Algorithm::Pso:
            return std::make_unique<detail::PsoTourOptimizer>(config.pso, costs,
                                                              config.population_size, rng);
    }
    throw ConfigError("unknown algorithm");
}

struct SimulationStep {
    std::size_t iteration = 0;
    double best_cost = 0.0;
    std::string event;  // "", "add_city", "update_edges", or joined with '+'
};

struct SimulationResult {
    Algorithm algorithm = Algorithm::Osoma;
    std::vector<SimulationStep> history;
    std::vector<std::string> final_tour;  // city ids
    double final_cost = 0.0;
};

/// Runs one discrete optimizer against a changing cost model. Pending
/// events are applied before the migration of their iteration: an added
/// city triggers population repair (or full reinitialization when
/// `reinit_on_event` is set), edge updates trigger re-evaluation. The
/// history has one row per iteration from 0 to `iterations`, annotated
/// with the event kinds fired at that tick.
inline SimulationResult simulate(const CostProvider& provider, Algorithm algorithm,
                                 const DtspConfig& config, std::uint64_t seed) {
    RandomStream rng(seed);
    DynamicCostMatrix matrix = provider.initial();

    SimulationResult result;
    result.algorithm = algorithm;

    const auto annotate = [](const std::vector<Event>& events) {
        std::string out;
        for (const auto& ev : events) {
            if (!out.empty()) out += '+';
            out += ev.kind_name();
        }
        return out;
    };

    const std::vector<Event> initial_events = provider.pending_events(0);
    for (const auto& ev : initial_events) apply_event(matrix, ev);

    auto optimizer = make_tour_optimizer(algorithm, config, matrix, rng);
    result.history.push_back({0, optimizer->best().cost, annotate(initial_events)});

    for (std::size_t it = 1; it <= config.iterations; ++it) {
        const std::vector<Event> events = provider.pending_events(it);
        for (const auto& ev : events) {
            apply_event(matrix, ev);
            if (config.reinit_on_event) continue;
            if (std::holds_alternative<AddCityEvent>(ev.payload)) {
                optimizer->absorb_city(static_cast<int>(matrix.size()) - 1, matrix);
            } else {
                optimizer->reevaluate(matrix);
            }
        }
        if (config.reinit_on_event && !events.empty()) {
            optimizer->reinit(matrix, rng);
        }
        optimizer->step(matrix, rng);
        result.history.push_back({it, optimizer->best().cost, annotate(events)});
    }

    result.final_cost = optimizer->best().cost;
    for (int city : optimizer->best().tour) {
        result.final_tour.push_back(matrix.id_of(city));
    }
    return result;
}

} // namespace osoma

#endif
