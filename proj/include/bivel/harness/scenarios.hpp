/// @file scenarios.hpp
/// @brief The built-in scenario library: names, documentation, defaults.

#pragma once

#include <string>
#include <vector>

namespace bivel::harness {

/// One built-in scenario: a documented default configuration plus the
/// specialized execution the runner attaches to its name.
struct Scenario {
    std::string name;
    std::string summary;     ///< one line for `list`
    std::string description; ///< multi-line body for `describe`
    std::string defaults;    ///< config text merged underneath user keys
};

/// All built-in scenarios in documentation order.
const std::vector<Scenario>& scenario_library();

/// Lookup by name; nullptr when unknown.
const Scenario* find_scenario(const std::string& name);

} // namespace bivel::harness
