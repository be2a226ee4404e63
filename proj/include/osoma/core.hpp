#ifndef OSOMA_CORE_HPP
#define OSOMA_CORE_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "osoma/errors.hpp"
#include "osoma/random.hpp"

namespace osoma {

/// A point in d-dimensional continuous space. Length is the problem
/// dimensionality and is fixed for the lifetime of a run.
using RealVector = std::vector<double>;

/// Objective to minimize. Maximization is expressed by negating at the caller.
using Objective = std::function<double(const RealVector&)>;

/// Box-bounded search region with per-dimension limits.
struct SearchSpace {
    RealVector lower;
    RealVector upper;

    SearchSpace() = default;

    SearchSpace(RealVector lo, RealVector hi) : lower(std::move(lo)), upper(std::move(hi)) {
        if (lower.size() != upper.size() || lower.empty()) {
            throw ConfigError("search space bounds must be nonempty and of equal length");
        }
        for (std::size_t k = 0; k < lower.size(); ++k) {
            if (!std::isfinite(lower[k]) || !std::isfinite(upper[k]) || !(lower[k] < upper[k])) {
                throw ConfigError("search space requires finite lower[k] < upper[k] at dimension " +
                                  std::to_string(k));
            }
        }
    }

    /// Uniform cube [lo, hi]^dim.
    static SearchSpace cube(double lo, double hi, std::size_t dim) {
        return SearchSpace(RealVector(dim, lo), RealVector(dim, hi));
    }

    std::size_t dimension() const { return lower.size(); }

    bool contains(const RealVector& x) const {
        if (x.size() != lower.size()) return false;
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (x[k] < lower[k] || x[k] > upper[k]) return false;
        }
        return true;
    }
};

/// One agent: a position and its objective value (lower is better).
/// The fitness is recomputed after every position change.
struct Individual {
    RealVector position;
    double fitness = std::numeric_limits<double>::infinity();
};

/// The agent set. members[leader_index] holds the minimum fitness.
struct Population {
    std::vector<Individual> members;
    std::size_t leader_index = 0;

    const Individual& leader() const { return members[leader_index]; }
    std::size_t size() const { return members.size(); }
};

/// Index of the minimum-fitness member, ties broken by lowest index.
/// Stores the result in pop.leader_index and returns it.
inline std::size_t select_leader(Population& pop) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop.members.size(); ++i) {
        if (pop.members[i].fitness < pop.members[best].fitness) best = i;
    }
    pop.leader_index = best;
    return best;
}

/// Replaces every out-of-bounds component with a fresh uniform draw inside
/// that dimension's bounds. In-bounds components pass through unchanged and
/// consume no randomness.
inline RealVector confine(RealVector position, const SearchSpace& space, RandomStream& rng) {
    for (std::size_t k = 0; k < position.size(); ++k) {
        if (position[k] < space.lower[k] || position[k] > space.upper[k]) {
            position[k] = rng.uniform(space.lower[k], space.upper[k]);
        }
    }
    return position;
}

/// Builds a population of `size` agents sampled uniformly per-dimension
/// within `space`, evaluates them, and selects the leader.
inline Population init_population(const SearchSpace& space, std::size_t size,
                                  const Objective& objective, RandomStream& rng) {
    if (size < 2) {
        throw ConfigError("population size must be at least 2, got " + std::to_string(size));
    }
    Population pop;
    pop.members.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        Individual ind;
        ind.position.resize(space.dimension());
        for (std::size_t k = 0; k < space.dimension(); ++k) {
            ind.position[k] = rng.uniform(space.lower[k], space.upper[k]);
        }
        ind.fitness = objective(ind.position);
        pop.members.push_back(std::move(ind));
    }
    select_leader(pop);
    return pop;
}

} // namespace osoma

#endif
