#ifndef OSOMA_BENCHMARKS_HPP
#define OSOMA_BENCHMARKS_HPP

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "osoma/core.hpp"
#include "osoma/errors.hpp"

namespace osoma {

enum class DimensionConstraint {
    Any,      // any d >= min_dim
    ExactlyTwo
};

/// One entry of the unconstrained test-function suite: evaluator, search
/// interval, known global optimum and a representative optimizer point.
struct BenchmarkFunction {
    std::string key;       // f1..f11
    std::string name;      // lowercase registry name, the CLI vocabulary
    double interval_low = 0.0;
    double interval_high = 0.0;
    double known_optimum = 0.0;
    DimensionConstraint constraint = DimensionConstraint::Any;
    std::size_t min_dim = 1;
    Objective objective;
    std::function<RealVector(std::size_t)> optimum_point; // a global minimizer at dimension d

    SearchSpace space(std::size_t dim) const {
        return SearchSpace::cube(interval_low, interval_high, dim);
    }

    void check_dimension(std::size_t dim) const {
        if (constraint == DimensionConstraint::ExactlyTwo && dim != 2) {
            throw DimensionError(name + " is defined for exactly 2 dimensions, got " +
                                 std::to_string(dim));
        }
        if (dim < min_dim) {
            throw DimensionError(name + " requires dimension >= " + std::to_string(min_dim) +
                                 ", got " + std::to_string(dim));
        }
    }

    /// Dimension-checked evaluation.
    double evaluate(const RealVector& x) const {
        check_dimension(x.size());
        return objective(x);
    }
};

namespace detail {

inline double sphere(const RealVector& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

inline double ackley(const RealVector& x) {
    const double d = static_cast<double>(x.size());
    double sq = 0.0, cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * std::numbers::pi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / d)) - std::exp(cs / d) + 20.0 + std::numbers::e;
}

inline double qing(const RealVector& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double t = x[i] * x[i] - static_cast<double>(i + 1);
        s += t * t;
    }
    return s;
}

inline double dejong3(const RealVector& x) {
    double s = 0.0;
    for (double v : x) s += std::fabs(v);
    return s;
}

inline double dejong4(const RealVector& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double sq = x[i] * x[i];
        s += static_cast<double>(i + 1) * sq * sq;
    }
    return s;
}

inline double rosenbrock(const RealVector& x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = x[i] - 1.0;
        s += 100.0 * a * a + b * b;
    }
    return s;
}

inline double schwefel_pow(const RealVector& x) {
    // The power-of-sum variant: (sum of squares) raised to pi.
    return std::pow(sphere(x), std::numbers::pi);
}

inline double booth(const RealVector& x) {
    const double a = x[0] + 2.0 * x[1] - 7.0;
    const double b = 2.0 * x[0] + x[1] - 5.0;
    return a * a + b * b;
}

inline double matyas(const RealVector& x) {
    return 0.26 * (x[0] * x[0] + x[1] * x[1]) - 0.48 * x[0] * x[1];
}

inline double easom(const RealVector& x) {
    const double dx = x[0] - std::numbers::pi;
    const double dy = x[1] - std::numbers::pi;
    return -std::cos(x[0]) * std::cos(x[1]) * std::exp(-dx * dx - dy * dy);
}

inline double bohachevsky(const RealVector& x) {
    return x[0] * x[0] + 2.0 * x[1] * x[1] - 0.3 * std::cos(3.0 * std::numbers::pi * x[0]) -
           0.4 * std::cos(4.0 * std::numbers::pi * x[1]) + 0.7;
}

inline RealVector zeros(std::size_t d) { return RealVector(d, 0.0); }
inline RealVector ones(std::size_t d) { return RealVector(d, 1.0); }

} // namespace detail

/// All eleven suite functions, in f1..f11 order.
inline const std::vector<BenchmarkFunction>& benchmark_registry() {
    static const std::vector<BenchmarkFunction> table = [] {
        using detail::zeros;
        const auto pi = std::numbers::pi;
        std::vector<BenchmarkFunction> fns;
        fns.push_back({"f1", "sphere", -5.12, 5.12, 0.0, DimensionConstraint::Any, 1,
                       detail::sphere, zeros});
        fns.push_back({"f2", "ackley", -32.0, 32.0, 0.0, DimensionConstraint::Any, 1,
                       detail::ackley, zeros});
        fns.push_back({"f3", "qing", -500.0, 500.0, 0.0, DimensionConstraint::Any, 1,
                       detail::qing, [](std::size_t d) {
                           RealVector x(d);
                           for (std::size_t i = 0; i < d; ++i) x[i] = std::sqrt(double(i + 1));
                           return x;
                       }});
        fns.push_back({"f4", "dejong3", -2.048, 2.048, 0.0, DimensionConstraint::Any, 1,
                       detail::dejong3, zeros});
        fns.push_back({"f5", "dejong4", -1.28, 1.28, 0.0, DimensionConstraint::Any, 1,
                       detail::dejong4, zeros});
        fns.push_back({"f6", "rosenbrock", -100.0, 100.0, 0.0, DimensionConstraint::Any, 2,
                       detail::rosenbrock, detail::ones});
        fns.push_back({"f7", "schwefel", -100.0, 100.0, 0.0, DimensionConstraint::Any, 1,
                       detail::schwefel_pow, zeros});
        fns.push_back({"f8", "booth", -5.0, 5.0, 0.0, DimensionConstraint::ExactlyTwo, 2,
                       detail::booth, [](std::size_t) { return RealVector{1.0, 3.0}; }});
        fns.push_back({"f9", "matyas", -10.0, 10.0, 0.0, DimensionConstraint::ExactlyTwo, 2,
                       detail::matyas, zeros});
        fns.push_back({"f10", "easom", -100.0, 100.0, -1.0, DimensionConstraint::ExactlyTwo, 2,
                       detail::easom, [pi](std::size_t) { return RealVector{pi, pi}; }});
        fns.push_back({"f11", "bohachevsky", -100.0, 100.0, 0.0, DimensionConstraint::ExactlyTwo, 2,
                       detail::bohachevsky, zeros});
        return fns;
    }();
    return table;
}

/// Lookup by registry key ("f1") or lowercase name ("sphere").
inline const BenchmarkFunction& benchmark_by_name(const std::string& name) {
    for (const auto& fn : benchmark_registry()) {
        if (fn.key == name || fn.name == name) return fn;
    }
    throw LookupError("unknown benchmark function: " + name);
}

/// Dimension-checked evaluation through the registry.
inline double evaluate_benchmark(const std::string& name, const RealVector& x) {
    return benchmark_by_name(name).evaluate(x);
}

} // namespace osoma

#endif
