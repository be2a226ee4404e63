#ifndef OSOMA_ERRORS_HPP
#define OSOMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace osoma {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid configuration: bad parameter values, unknown algorithm names,
/// malformed experiment setups. Rejected before any computation starts.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Malformed input file (instance or schedule). Messages carry the
/// offending field or entry.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Unknown name in a registry lookup.
class LookupError : public Error {
public:
    using Error::Error;
};

/// Objective evaluated at an incompatible dimensionality.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Swap operator index outside the tour.
class IndexError : public Error {
public:
    using Error::Error;
};

/// Inconsistent problem instance: unknown cities, mismatched city sets,
/// missing cost entries, or an enumeration budget exceeded.
class InstanceError : public Error {
public:
    using Error::Error;
};

} // namespace osoma

#endif
