/// @file config.hpp
/// @brief Scenario configuration: grammar, validation, canonical form, sweeps.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "bivel/analysis/reference_scales.hpp"
#include "bivel/core/flow_state.hpp"
#include "bivel/core/gas_model.hpp"
#include "bivel/core/grid.hpp"
#include "bivel/core/transport.hpp"
#include "bivel/governing/variant.hpp"
#include "bivel/solver/integrator.hpp"

namespace bivel::harness {

/// One sweep axis: the dotted key it overrides and the values to visit.
struct SweepAxis {
    std::string parameter;
    std::vector<double> values;

    friend bool operator==(const SweepAxis&, const SweepAxis&) = default;
};

/// Initial-condition spec: a named profile plus its numeric parameters.
/// After parsing, `params` holds the full defaulted parameter set of the
/// profile, so two configs compare equal iff they build the same state.
struct InitialSpec {
    std::string profile = "uniform";
    std::map<std::string, double> params;

    double at(const std::string& name) const;

    friend bool operator==(const InitialSpec&, const InitialSpec&) = default;
};

/// A fully validated scenario configuration.
///
/// Transport runs in one of two modes: explicit coefficients (`transport.*`
/// keys) or dimensionless mode (`scales.*` keys), where the coefficients are
/// derived from the Knudsen number via the reference scales. Mixing the two
/// key families is a config error.
struct ScenarioConfig {
    std::string scenario; ///< built-in scenario name; empty = plain integration run

    governing::ModelVariant model = governing::ModelVariant::nsf_baseline;

    double gas_molecular_mass = 1.0;
    double gas_constant = 1.0;

    bool dimensionless = false;
    double mu = 0.005; ///< explicit-mode coefficients (ignored in dimensionless mode)
    double kappa_m = 0.005;
    double kappa_h = 0.0125;
    double kappa_klim = 0.0;
    analysis::ReferenceScales scales; ///< valid only in dimensionless mode

    int grid_cells = 128;
    double grid_length = 1.0;
    core::Boundary boundary = core::Boundary::periodic;

    InitialSpec initial;
    solver::IntegratorConfig integrator;

    std::vector<std::string> diagnostics{"conserved"};
    std::string output_dir = "out";
    bool emit_plot = true;
    int workers = 0; ///< sweep parallelism; 0 = hardware concurrency

    std::vector<SweepAxis> sweep;

    // -- resolved views ------------------------------------------------------
    core::GasModel gas() const;
    core::TransportCoefficients transport() const;
    core::Grid1D grid() const;
    /// Builds the 1-D initial state for time-integration profiles; throws
    /// ValidationError for the planar-only profile rigid-rotation-field.
    core::FlowState initial_state() const;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

bool operator==(const solver::IntegratorConfig&, const solver::IntegratorConfig&);
bool operator==(const analysis::ReferenceScales&, const analysis::ReferenceScales&);

/// Parses the documented `key = value` grammar. A `scenario = <name>` line
/// merges the named built-in scenario's defaults underneath the user's keys.
/// Collects every problem — unknown key, bad type, range violation, broken
/// invariant — and throws one ConfigError listing all of them with line
/// numbers; never stops at the first.
ScenarioConfig parse_config(const std::string& text);

/// Canonical text form: fixed key order, %.17g numbers. Feeding the result
/// back through parse_config reproduces the identical config.
std::string serialize_config(const ScenarioConfig& config);

/// The ordered axis-value assignments the sweep expansion visits (first axis
/// outermost); one inner vector per expanded run, pairing each axis parameter
/// with its value. Empty when the config has no sweep axes.
std::vector<std::vector<std::pair<std::string, double>>>
sweep_assignments(const ScenarioConfig& config);

/// Cross-product expansion of the sweep axes, first axis outermost. Each
/// returned config has its axes cleared, the overridden value applied and
/// re-validated, and `output_dir` moved to `<dir>/runs/<key=value[_...]>`.
std::vector<ScenarioConfig> expand_sweep(const ScenarioConfig& config);

/// Directory-name fragment for one sweep point, e.g. "scales.knudsen=0.001".
std::string sweep_point_name(const std::vector<std::pair<std::string, double>>& assignment);

} // namespace bivel::harness
