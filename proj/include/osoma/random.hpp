#ifndef OSOMA_RANDOM_HPP
#define OSOMA_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "osoma/errors.hpp"

namespace osoma {

/// Deterministic, seedable random stream.
///
/// The engine is std::mt19937_64, whose raw output sequence is fully pinned
/// by the C++ standard. The real-valued mappings below are implemented by
/// hand because the std distributions are implementation-defined; with them
/// a given seed yields the same draw sequence on every platform.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform draw in [0, 1). Uses the top 53 bits of the engine output.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform draw in [a, b). Requires a <= b; a == b always returns a.
    /// One engine step is consumed regardless of the interval width.
    double uniform(double a, double b) {
        const double u = uniform01();
        double v = a + u * (b - a);
        if (v >= b && a < b) {
            // a + u*(b-a) can round up to b; the contract excludes b.
            v = std::nextafter(b, a);
        }
        return v;
    }

    /// Uniform index in [0, n). Rejection sampling, no modulo bias.
    std::size_t uniform_index(std::size_t n) {
        if (n == 0) throw IndexError("uniform_index needs a nonempty range");
        const std::uint64_t span = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return static_cast<std::size_t>(x % span);
    }

    /// Derives an independent child stream; advances this stream by one step.
    RandomStream split() { return RandomStream(mix(next_u64())); }

    /// SplitMix64 finalizer, used to decorrelate derived seeds.
    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// Fisher-Yates shuffle driven by a RandomStream. std::shuffle is avoided:
/// its draw pattern is implementation-defined.
template <typename T>
void shuffle(std::vector<T>& items, RandomStream& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const std::size_t j = rng.uniform_index(i);
        std::swap(items[i - 1], items[j]);
    }
}

} // namespace osoma

#endif
