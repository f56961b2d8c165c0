/// @file runner.hpp
/// @brief Scenario execution: output bundles, sweep orchestration, check suite.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bivel/harness/config.hpp"

namespace bivel::harness {

/// Version stamped into every run manifest.
inline constexpr const char* version_string = "0.1.0";

/// Result of one scenario execution.
struct RunOutcome {
    std::string output_dir;
    std::string report; ///< the text also written to report.txt
    std::vector<std::pair<std::string, double>> metrics; ///< named headline numbers
};

/// Looks a metric up by name; throws core::ValidationError when absent.
double metric(const RunOutcome& outcome, const std::string& name);

/// Executes one scenario, dispatching on `config.scenario` (empty = plain
/// time-integration run), and writes the output bundle under
/// `config.output_dir`: manifest.txt, report.txt, the scenario's CSV files,
/// and plot.py when plot emission is enabled. Study scenarios that carry
/// their own sweep axis (the mean-free-path and resolution ladders) consume
/// it internally and produce a single bundle with the fitted slopes.
/// Divergence during time integration propagates as core::DivergenceError
/// after the report records the failure.
RunOutcome run_scenario(const ScenarioConfig& config);

/// Cross-product sweep: expands the axes, runs every point concurrently up
/// to the worker count, and joins before writing the sweep-level bundle
/// (manifest.txt, summary.csv with one row per run, report.txt, plot.py).
/// Worker count priority: `workers_override` (> 0, from the CLI or the
/// environment), then config.workers, then hardware concurrency.
/// The first failure is rethrown after the surviving runs are summarized.
std::vector<RunOutcome> run_sweep(const ScenarioConfig& config, int workers_override = 0);

/// Runs the mechanical/entropy property suite and formats a pass/fail table.
/// `*all_passed` reports whether every row passed.
std::string check_report(bool* all_passed);

} // namespace bivel::harness
