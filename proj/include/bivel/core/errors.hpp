/// @file errors.hpp
/// @brief Exception types shared across the library.

#pragma once

#include <stdexcept>
#include <string>

namespace bivel::core {

/// A physical state failed a positivity/consistency check.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// The constitutive closure became singular (e.g. division by non-positive pressure).
class SingularClosureError : public std::runtime_error {
public:
    explicit SingularClosureError(const std::string& what) : std::runtime_error(what) {}
};

/// A time integration produced a non-finite or non-physical state.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(const std::string& what, double time, long step)
        : std::runtime_error(what), time(time), step(step) {}
    double time;
    long step;
};

/// A scenario configuration could not be parsed or validated.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bivel::core
