#ifndef OSOMA_COST_MATRIX_HPP
#define OSOMA_COST_MATRIX_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "osoma/errors.hpp"

namespace osoma {

/// Directed travel-cost matrix over a growing set of cities. Costs are
/// finite and nonnegative for every ordered pair of distinct cities; the
/// diagonal is never queried. The matrix represents the cost state at one
/// point in time; event application moves it to the next state.
class DynamicCostMatrix {
public:
    DynamicCostMatrix() = default;

    DynamicCostMatrix(std::vector<std::string> ids, std::vector<double> costs)
        : ids_(std::move(ids)), costs_(std::move(costs)) {
        const std::size_t n = ids_.size();
        if (costs_.size() != n * n) {
            throw InstanceError("cost matrix must be " + std::to_string(n) + "x" +
                                std::to_string(n));
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                check_cost(costs_[i * n + j], ids_[i], ids_[j]);
            }
        }
        rebuild_index();
    }

    std::size_t size() const { return ids_.size(); }

    const std::vector<std::string>& city_ids() const { return ids_; }

    const std::string& id_of(int index) const { return ids_.at(static_cast<std::size_t>(index)); }

    /// Index of a city id, or -1 when absent.
    int index_of(const std::string& id) const {
        auto it = index_.find(id);
        return it == index_.end() ? -1 : it->second;
    }

    double cost(int from, int to) const {
        const std::size_t n = ids_.size();
        const auto f = static_cast<std::size_t>(from);
        const auto t = static_cast<std::size_t>(to);
        if (from < 0 || to < 0 || f >= n || t >= n || from == to) {
            throw InstanceError("cost lookup (" + std::to_string(from) + ", " +
                                std::to_string(to) + ") invalid for " + std::to_string(n) +
                                " cities");
        }
        return costs_[f * n + t];
    }

    void set_cost(int from, int to, double value) {
        check_cost(value, id_of(from), id_of(to));
        costs_[static_cast<std::size_t>(from) * ids_.size() + static_cast<std::size_t>(to)] = value;
    }

    /// Grows the matrix by one city. `from_new[j]` is the cost new -> j and
    /// `to_new[j]` the cost j -> new, both in current city order.
    void add_city(const std::string& id, const std::vector<double>& from_new,
                  const std::vector<double>& to_new) {
        const std::size_t n = ids_.size();
        if (index_.count(id)) {
            throw InstanceError("city already present: " + id);
        }
        if (from_new.size() != n || to_new.size() != n) {
            throw ValidationError("add_city payload for '" + id + "' must carry " +
                                  std::to_string(n) + " outgoing and incoming costs");
        }
        for (std::size_t j = 0; j < n; ++j) {
            check_cost(from_new[j], id, ids_[j]);
            check_cost(to_new[j], ids_[j], id);
        }

        std::vector<double> grown((n + 1) * (n + 1), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) grown[i * (n + 1) + j] = costs_[i * n + j];
            grown[i * (n + 1) + n] = to_new[i];
            grown[n * (n + 1) + i] = from_new[i];
        }
        costs_ = std::move(grown);
        ids_.push_back(id);
        index_[id] = static_cast<int>(n);
    }

    bool is_symmetric() const {
        const std::size_t n = ids_.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (costs_[i * n + j] != costs_[j * n + i]) return false;
            }
        }
        return true;
    }

private:
    static void check_cost(double value, const std::string& from, const std::string& to) {
        if (!std::isfinite(value) || value < 0.0) {
            throw InstanceError("cost " + from + " -> " + to + " must be finite and >= 0");
        }
    }

    void rebuild_index() {
        index_.clear();
        for (std::size_t i = 0; i < ids_.size(); ++i) {
            if (!index_.emplace(ids_[i], static_cast<int>(i)).second) {
                throw InstanceError("duplicate city id: " + ids_[i]);
            }
        }
    }

    std::vector<std::string> ids_;
    std::vector<double> costs_;  // row-major, diagonal unused
    std::unordered_map<std::string, int> index_;
};

} // namespace osoma

#endif
