#ifndef OSOMA_SWAP_HPP
#define OSOMA_SWAP_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "osoma/errors.hpp"

namespace osoma {

/// A city permutation. Entries index the instance's city list; cost is
/// always evaluated as a closed cycle back to the first city.
using Tour = std::vector<int>;

/// Transposition of the tour entries at positions i and j (0-based).
struct SwapOperator {
    std::size_t i = 0;
    std::size_t j = 0;

    bool operator==(const SwapOperator&) const = default;
};

/// Ordered list of swap operators. Applying any sequence to a valid tour
/// yields a valid tour.
using SwapSequence = std::vector<SwapOperator>;

/// Applies one transposition in place.
inline void apply_swap(Tour& tour, const SwapOperator& op) {
    if (op.i >= tour.size() || op.j >= tour.size()) {
        throw IndexError("swap operator (" + std::to_string(op.i) + ", " + std::to_string(op.j) +
                         ") out of range for tour of length " + std::to_string(tour.size()));
    }
    std::swap(tour[op.i], tour[op.j]);
}

/// Returns a copy with one transposition applied.
inline Tour applied(Tour tour, const SwapOperator& op) {
    apply_swap(tour, op);
    return tour;
}

/// Applies a whole sequence in order.
inline Tour applied(Tour tour, const SwapSequence& seq) {
    for (const auto& op : seq) apply_swap(tour, op);
    return tour;
}

/// The swap sequence S with source ⊕ S = target, built by a left-to-right
/// scan: whenever the working copy disagrees with the target at position k,
/// the needed city is located at some position m > k and MO(k, m) is emitted
/// and applied immediately. At most n - 1 operators are produced.
inline SwapSequence subtract(const Tour& target, const Tour& source) {
    if (target.size() != source.size()) {
        throw InstanceError("swap subtraction requires tours over the same city set");
    }
    Tour check_a = target;
    Tour check_b = source;
    std::sort(check_a.begin(), check_a.end());
    std::sort(check_b.begin(), check_b.end());
    if (check_a != check_b) {
        throw InstanceError("swap subtraction requires tours over the same city set");
    }

    SwapSequence seq;
    Tour work = source;
    for (std::size_t k = 0; k < work.size(); ++k) {
        if (work[k] == target[k]) continue;
        std::size_t m = k + 1;
        while (work[m] != target[k]) ++m;
        seq.push_back({k, m});
        std::swap(work[k], work[m]);
    }
    return seq;
}

} // namespace osoma

#endif
