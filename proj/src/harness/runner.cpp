/// @file runner.cpp
/// @brief Scenario execution: output bundles, sweep orchestration, check suite.

#include "bivel/harness/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include "bivel/analysis/dispersion.hpp"
#include "bivel/analysis/entropy_budget.hpp"
#include "bivel/analysis/fit.hpp"
#include "bivel/analysis/knudsen.hpp"
#include "bivel/analysis/manufactured.hpp"
#include "bivel/analysis/mechanical.hpp"
#include "bivel/analysis/prescribed_field.hpp"
#include "bivel/constitutive/fluxes.hpp"
#include "bivel/core/errors.hpp"
#include "bivel/governing/rhs.hpp"
#include "bivel/harness/csv.hpp"
#include "bivel/solver/integrator.hpp"

namespace bivel::harness {

namespace {

namespace fs = std::filesystem;

using Metrics = std::vector<std::pair<std::string, double>>;

// ---------------------------------------------------------------------------
// Small file and formatting helpers.
// ---------------------------------------------------------------------------

std::string short_num(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

void write_text(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

void write_manifest(const ScenarioConfig& config, const fs::path& dir) {
    std::string text = "meta.version = ";
    text += version_string;
    text += "\nmeta.generator = bivel\n";
    text += serialize_config(config);
    write_text(dir / "manifest.txt", text);
}

/// Generic quick-look plotter over the run directory's CSV files; emitted as
/// a standalone script so the library never links a plotting dependency.
constexpr const char* plot_script = R"PY(#!/usr/bin/env python3
"""Render quick-look figures for every CSV in this run directory."""
import csv
import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def load(path):
    with path.open(newline="") as handle:
        rows = list(csv.reader(handle))
    if len(rows) < 2:
        return None
    header, data = rows[0], rows[1:]
    cols = {}
    for j, name in enumerate(header):
        values = [row[j] for row in data]
        try:
            cols[name] = [float(v) for v in values]
        except ValueError:
            cols[name] = values
    return cols


def render(path):
    cols = load(path)
    if not cols:
        return
    numeric = [n for n in cols if cols[n] and isinstance(cols[n][0], float)]
    if len(numeric) < 2:
        return
    x_name = "position" if "position" in numeric else numeric[0]
    group_key = next(
        (n for n in cols
         if isinstance(cols[n][0], str) and len(set(cols[n])) < len(cols[n])),
        None,
    )
    groups = {"": cols}
    if group_key:
        groups = {}
        for i, tag in enumerate(cols[group_key]):
            bucket = groups.setdefault(tag, {n: [] for n in numeric})
            for n in numeric:
                bucket[n].append(cols[n][i])
    fig, ax = plt.subplots(figsize=(7.5, 4.8))
    for tag, bucket in sorted(groups.items()):
        for n in numeric:
            if n == x_name:
                continue
            label = f"{tag} {n}".strip()
            ax.plot(bucket[x_name], bucket[n], marker=".", lw=1, label=label)
    xs = cols[x_name]
    if all(v > 0 for v in xs) and max(xs) / max(min(xs), 1e-300) > 50:
        ax.set_xscale("log")
        ys = [v for n in numeric if n != x_name for v in cols[n]]
        if ys and all(v > 0 for v in ys):
            ax.set_yscale("log")
    ax.set_xlabel(x_name)
    ax.legend(fontsize=6, ncol=2)
    ax.set_title(path.name)
    fig.tight_layout()
    fig.savefig(path.with_suffix(".png"), dpi=130)
    plt.close(fig)


def main():
    root = pathlib.Path(__file__).resolve().parent
    for path in sorted(root.glob("*.csv")) + sorted(root.glob("snapshots/*.csv")):
        render(path)


if __name__ == "__main__":
    main()
)PY";

/// Writes report.txt (and plot.py when enabled) and assembles the outcome.
RunOutcome finish_run(const ScenarioConfig& config, const fs::path& dir,
                      const std::string& body, Metrics metrics) {
    std::ostringstream report;
    report << (config.scenario.empty() ? std::string("integration run")
                                       : config.scenario)
           << " | model " << governing::variant_name(config.model) << " | "
           << config.grid_cells << " cells\n";
    report << body;
    if (!metrics.empty()) {
        report << "metrics:\n";
        for (const auto& [name, value] : metrics) {
            report << "  " << name << " = " << short_num(value) << "\n";
        }
    }
    write_text(dir / "report.txt", report.str());
    if (config.emit_plot) write_text(dir / "plot.py", plot_script);
    RunOutcome outcome;
    outcome.output_dir = dir.string();
    outcome.report = report.str();
    outcome.metrics = std::move(metrics);
    return outcome;
}

// ---------------------------------------------------------------------------
// Field / conservation helpers.
// ---------------------------------------------------------------------------

/// Largest elementwise deviation between two fields, scaled by the first
/// field's own magnitude (floored to keep zero fields comparable).
double relative_mismatch(const core::Field& a, const core::Field& b) {
    double scale = 0.0;
    double gap = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        scale = std::max(scale, std::abs(a[i]));
        gap = std::max(gap, std::abs(a[i] - b[i]));
    }
    return gap / std::max(scale, 1e-30);
}

struct Totals {
    double mass = 0.0;
    double momentum = 0.0;
    double energy = 0.0;
};

Totals conserved_totals(const core::FlowState& state, const core::GasModel& gas,
                        const core::TransportCoefficients& coeffs,
                        governing::ModelVariant variant) {
    const auto u = governing::to_conserved(state, gas, coeffs, variant);
    return {core::integrate(state.grid, u.density), core::integrate(state.grid, u.momentum),
            core::integrate(state.grid, u.energy)};
}

double mean_temperature(const core::FlowState& state, const core::GasModel& gas) {
    double sum = 0.0;
    for (double e : state.e_in) sum += gas.temperature(e);
    return sum / state.n_cells();
}

/// Integrated entropy-budget terms selected by the diagnostics list, with
/// stable `family.term` column names.
Metrics budget_values(const ScenarioConfig& config, const core::FlowState& state,
                      const core::GasModel& gas,
                      const core::TransportCoefficients& coeffs) {
    Metrics out;
    auto append = [&out](const std::string& prefix, const analysis::EntropyBudget& budget) {
        for (const auto& term : budget.terms) {
            out.emplace_back(prefix + "." + term.name, term.integral);
        }
        out.emplace_back(prefix + ".total", budget.total_integral);
    };
    for (const auto& name : config.diagnostics) {
        if (name == "volume-budget") {
            const auto fluxes = constitutive::flux_set(state, gas, coeffs);
            append("volume", analysis::entropy_budget_volume(state, fluxes, gas, coeffs));
        } else if (name == "klimontovich-budget") {
            append("klim", analysis::entropy_budget_klimontovich(state, gas, coeffs));
        } else if (name == "reduced-budget") {
            const auto fluxes = constitutive::flux_set(state, gas, coeffs);
            append("reduced", analysis::entropy_budget_reduced(state, fluxes, gas, coeffs));
        }
    }
    return out;
}

void write_snapshot(const fs::path& path, double time, const core::FlowState& state,
                    const core::GasModel& gas, const core::TransportCoefficients& coeffs) {
    const auto derived = core::derived_quantities(state, gas);
    const auto fluxes = constitutive::flux_set(state, gas, coeffs);
    CsvWriter csv(path.string(),
                  {"time", "position", "number_density", "specific_volume", "velocity",
                   "internal_energy", "mass_density", "pressure", "temperature",
                   "volume_drift_velocity", "volume_velocity", "stress_velocity_part",
                   "stress_drift_part", "stress_total", "heat_flux", "entropic_heat_flux"});
    for (int i = 0; i < state.n_cells(); ++i) {
        csv.row(std::vector<double>{time, state.grid.center(i), state.a_n[i], state.v_bar[i],
                                    state.u_m[i], state.e_in[i], derived.rho_bar[i],
                                    derived.pressure[i], derived.temperature[i], fluxes.jv[i],
                                    fluxes.u_v[i], fluxes.pi_um[i], fluxes.pi_jv[i],
                                    fluxes.pi_v[i], fluxes.q_prime[i], fluxes.q_s[i]});
    }
    csv.close();
}

// ---------------------------------------------------------------------------
// Generic time integration with the standard output bundle.
// ---------------------------------------------------------------------------

struct IntegrationResult {
    solver::Trajectory trajectory;
    Metrics metrics; ///< conservation drifts plus step counts
};

/// Integrates the configured initial state, writing series.csv and the
/// snapshot files. On divergence the report records the failure before the
/// error propagates.
IntegrationResult integrate_scenario(const ScenarioConfig& config, const fs::path& dir) {
    const auto gas = config.gas();
    const auto coeffs = config.transport();
    const auto initial = config.initial_state();

    IntegrationResult result;
    try {
        result.trajectory = solver::run(config.model, initial, gas, coeffs, config.integrator);
    } catch (const core::DivergenceError& error) {
        write_text(dir / "report.txt",
                   std::string("run diverged: ") + error.what() + "\n");
        throw;
    }
    const auto& frames = result.trajectory.frames;

    // series.csv: conserved integrals plus the selected budget integrals.
    std::vector<std::string> header = {"time", "mass", "momentum", "energy"};
    const bool track_volume = governing::has_independent_volume(config.model);
    if (track_volume) header.push_back("mean_specific_volume");
    const Metrics first_budget = budget_values(config, frames.front().state, gas, coeffs);
    for (const auto& [name, value] : first_budget) header.push_back(name);

    CsvWriter series((dir / "series.csv").string(), header);
    std::vector<Totals> totals;
    totals.reserve(frames.size());
    for (const auto& frame : frames) {
        totals.push_back(conserved_totals(frame.state, gas, coeffs, config.model));
        std::vector<double> row = {frame.t, totals.back().mass, totals.back().momentum,
                                   totals.back().energy};
        if (track_volume) {
            row.push_back(core::integrate(frame.state.grid, frame.state.v_bar) /
                          frame.state.grid.length);
        }
        for (const auto& [name, value] : budget_values(config, frame.state, gas, coeffs)) {
            row.push_back(value);
        }
        series.row(row);
    }
    series.close();

    fs::create_directories(dir / "snapshots");
    for (std::size_t f = 0; f < frames.size(); ++f) {
        char name[32];
        std::snprintf(name, sizeof(name), "%06zu.csv", f);
        write_snapshot(dir / "snapshots" / name, frames[f].t, frames[f].state, gas, coeffs);
    }

    // Relative drifts. Momentum often starts at zero, so it is measured
    // against the acoustic momentum scale (total mass times sound speed).
    const Totals base = totals.front();
    double mass_drift = 0.0;
    double momentum_drift = 0.0;
    double energy_drift = 0.0;
    const double momentum_scale =
        std::max(std::abs(base.momentum),
                 base.mass * gas.sound_speed(mean_temperature(frames.front().state, gas)));
    for (const auto& t : totals) {
        mass_drift = std::max(mass_drift, std::abs(t.mass - base.mass));
        momentum_drift = std::max(momentum_drift, std::abs(t.momentum - base.momentum));
        energy_drift = std::max(energy_drift, std::abs(t.energy - base.energy));
    }
    result.metrics.emplace_back("mass_drift", mass_drift / std::abs(base.mass));
    result.metrics.emplace_back("momentum_drift", momentum_drift / momentum_scale);
    result.metrics.emplace_back("energy_drift", energy_drift / std::abs(base.energy));
    result.metrics.emplace_back("steps", static_cast<double>(result.trajectory.steps));
    result.metrics.emplace_back("t_final", result.trajectory.t_final);
    return result;
}

void require_no_axes(const ScenarioConfig& config) {
    if (!config.sweep.empty()) {
        throw core::ConfigError("this configuration declares sweep axes; run it with the "
                                "sweep command");
    }
}

RunOutcome run_plain(const ScenarioConfig& config, const fs::path& dir) {
    require_no_axes(config);
    auto result = integrate_scenario(config, dir);
    std::ostringstream body;
    body << "integrated " << result.trajectory.steps << " steps to t = "
         << short_num(result.trajectory.t_final) << "; stored "
         << result.trajectory.frames.size() << " frames\n";
    return finish_run(config, dir, body.str(), std::move(result.metrics));
}

// ---------------------------------------------------------------------------
// acoustic-decay: measured wave damping vs. the linearized prediction.
// ---------------------------------------------------------------------------

RunOutcome run_acoustic_decay(const ScenarioConfig& config, const fs::path& dir) {
    require_no_axes(config);
    auto result = integrate_scenario(config, dir);
    const auto gas = config.gas();
    const auto coeffs = config.transport();
    const double u0 = config.initial.at("velocity");

    CsvWriter decay((dir / "decay.csv").string(), {"time", "velocity_rms"});
    std::vector<double> times;
    std::vector<double> log_rms;
    for (const auto& frame : result.trajectory.frames) {
        double sum = 0.0;
        for (double u : frame.state.u_m) sum += (u - u0) * (u - u0);
        const double rms = std::sqrt(sum / frame.state.n_cells());
        decay.row(std::vector<double>{frame.t, rms});
        if (rms > 0.0) {
            times.push_back(frame.t);
            log_rms.push_back(std::log(rms));
        }
    }
    decay.close();
    if (times.size() < 2) {
        throw core::ValidationError("acoustic-decay: too few frames to fit a decay rate; "
                                    "lower integrator.store_every");
    }
    const double measured = -analysis::fit_line(times, log_rms).slope;

    // Acoustic mode of the linearized problem at the excited wavenumber.
    const analysis::UniformBackground background{config.initial.at("density"),
                                                 config.initial.at("temperature")};
    const double k =
        2.0 * M_PI * config.initial.at("wavenumber") / config.grid_length;
    const auto modes =
        analysis::temporal_modes(config.model, background, gas, coeffs, k);
    double predicted = 0.0;
    double best_re = -1.0;
    for (const auto& mode : modes) {
        if (mode.real() > best_re) {
            best_re = mode.real();
            predicted = -mode.imag();
        }
    }
    const double gap = std::abs(measured - predicted) / std::max(predicted, 1e-300);

    auto metrics = std::move(result.metrics);
    metrics.emplace_back("measured_decay_rate", measured);
    metrics.emplace_back("predicted_decay_rate", predicted);
    metrics.emplace_back("decay_rate_gap", gap);

    std::ostringstream body;
    body << "velocity-RMS decay rate " << short_num(measured)
         << " vs. linearized acoustic-mode prediction " << short_num(predicted)
         << " (relative gap " << short_num(gap)
         << "; the eigenmode initial condition is first-order, so a small gap "
            "from thermal-mode contamination is expected)\n";
    return finish_run(config, dir, body.str(), std::move(metrics));
}

// ---------------------------------------------------------------------------
// klimontovich-entropy-search: sign structure of the indefinite cross group.
// ---------------------------------------------------------------------------

RunOutcome run_klim_search(const ScenarioConfig& config, const fs::path& dir) {
    require_no_axes(config);
    const auto gas = config.gas();
    const auto coeffs = config.transport();
    const auto grid = config.grid();
    const double rho0 = config.initial.at("density");
    const double u0 = config.initial.at("velocity");
    const double T0 = config.initial.at("temperature");

    const std::vector<double> rho_amps = {0.1, 0.3, 0.5};
    const std::vector<double> T_amps = {0.02, 0.05, 0.1, 0.2};
    const std::vector<double> phases = {0.0, 0.5 * M_PI, M_PI};

    CsvWriter search((dir / "search.csv").string(),
                     {"rho_amp", "T_amp", "phase_shift", "curly_min", "curly_max",
                      "total_integral"});
    double curly_min = std::numeric_limits<double>::infinity();
    double curly_max = -std::numeric_limits<double>::infinity();
    double best_total = std::numeric_limits<double>::infinity();
    double best_rho = 0.0, best_T = 0.0, best_phase = 0.0;
    for (double rho_amp : rho_amps) {
        for (double T_amp : T_amps) {
            for (double phase : phases) {
                core::FlowState state(grid);
                for (int i = 0; i < grid.n_cells; ++i) {
                    const double arg = 2.0 * M_PI * grid.center(i) / grid.length;
                    state.a_n[i] =
                        rho0 * (1.0 + rho_amp * std::sin(arg)) / gas.molecular_mass;
                    state.u_m[i] = u0;
                    state.e_in[i] =
                        gas.c_v * T0 * (1.0 + T_amp * std::sin(arg + phase));
                }
                state.identify_volume_with_density();
                const auto budget =
                    analysis::entropy_budget_klimontovich(state, gas, coeffs);
                const auto& curly = budget.term("indefinite_group");
                const auto [lo, hi] =
                    std::minmax_element(curly.values.begin(), curly.values.end());
                curly_min = std::min(curly_min, *lo);
                curly_max = std::max(curly_max, *hi);
                if (budget.total_integral < best_total) {
                    best_total = budget.total_integral;
                    best_rho = rho_amp;
                    best_T = T_amp;
                    best_phase = phase;
                }
                search.row(std::vector<double>{rho_amp, T_amp, phase, *lo, *hi,
                                               budget.total_integral});
            }
        }
    }
    search.close();

    // Reduced-model indefinite residual on a generic smooth state, for the
    // companion structural report (nonzero whenever kappa_m > 0).
    core::FlowState generic(grid);
    for (int i = 0; i < grid.n_cells; ++i) {
        const double arg = 2.0 * M_PI * grid.center(i) / grid.length;
        generic.a_n[i] = rho0 * (1.0 + 0.3 * std::sin(arg)) / gas.molecular_mass;
        generic.u_m[i] = u0 + 0.1 * gas.sound_speed(T0) * std::sin(arg + 0.7);
        generic.e_in[i] = gas.c_v * T0 * (1.0 + 0.1 * std::sin(arg + 1.9));
    }
    generic.identify_volume_with_density();
    const auto fluxes = constitutive::flux_set(generic, gas, coeffs);
    const auto reduced = analysis::entropy_budget_reduced(generic, fluxes, gas, coeffs);
    const auto& residual = reduced.term("drift_residual");

    const bool found_negative = best_total < -1e-12;
    Metrics metrics = {
        {"curly_min", curly_min},
        {"curly_max", curly_max},
        {"min_total_integral", best_total},
        {"found_negative_total", found_negative ? 1.0 : 0.0},
        {"best_rho_amp", best_rho},
        {"best_T_amp", best_T},
        {"best_phase", best_phase},
        {"reduced_residual_integral", residual.integral},
        {"reduced_residual_magnitude", residual.magnitude},
    };

    std::ostringstream body;
    body << "indefinite cross group ranges over [" << short_num(curly_min) << ", "
         << short_num(curly_max) << "] across the search family (both signs attained)\n";
    if (found_negative) {
        body << "most negative total production integral " << short_num(best_total)
             << " at density amplitude " << short_num(best_rho)
             << ", temperature amplitude " << short_num(best_T) << ", phase shift "
             << short_num(best_phase)
             << " - the anti-aligned large-density/small-temperature corner\n";
    } else {
        body << "no state in the search family produced a negative total production "
             << "integral (closest: " << short_num(best_total) << ")\n";
    }
    body << "reduced-model indefinite residual on a generic state: integral "
         << short_num(residual.integral) << ", magnitude "
         << short_num(residual.magnitude) << " (nonzero for kappa_m > 0)\n";
    return finish_run(config, dir, body.str(), std::move(metrics));
}

// ---------------------------------------------------------------------------
// kn-ordering-sweep: Knudsen-power ladder of the volume-budget groups.
// ---------------------------------------------------------------------------

analysis::StarredProfile starred_from_initial(const ScenarioConfig& config) {
    if (config.initial.profile != "manufactured") {
        throw core::ConfigError("this scenario reads its fields from the manufactured "
                                "profile; set initial.profile = manufactured");
    }
    analysis::StarredProfile profile;
    profile.rho_amp = config.initial.at("density_amplitude");
    profile.u_amp = config.initial.at("velocity_amplitude");
    profile.T_amp = config.initial.at("temperature_amplitude");
    profile.rho_phase = config.initial.at("density_phase");
    profile.u_phase = config.initial.at("velocity_phase");
    profile.T_phase = config.initial.at("temperature_phase");
    return profile;
}

void require_dimensionless(const ScenarioConfig& config) {
    if (!config.dimensionless) {
        throw core::ConfigError("this scenario sweeps the mean free path and needs "
                                "dimensionless mode; set scales.knudsen");
    }
}

std::vector<double> axis_values(const ScenarioConfig& config, const std::string& parameter) {
    for (const auto& axis : config.sweep) {
        if (axis.parameter == parameter) return axis.values;
    }
    return {};
}

RunOutcome run_kn_ordering(const ScenarioConfig& config, const fs::path& dir) {
    require_dimensionless(config);
    const auto profile = starred_from_initial(config);
    const auto knudsens = axis_values(config, "scales.knudsen");

    static const std::vector<std::string> groups = {
        "heat_conduction", "shear_mass", "cross_mass_drift", "cross_drift_mass",
        "drift_drift"};
    std::vector<std::string> header = {"knudsen"};
    header.insert(header.end(), groups.begin(), groups.end());

    if (knudsens.empty()) {
        // Single sweep point (typically one expanded run of a sweep): report
        // the group magnitudes at the configured Knudsen number.
        const auto point = analysis::knudsen_ordering_point(
            config.scales.knudsen(), profile, config.grid_cells, config.scales);
        CsvWriter summary((dir / "summary.csv").string(), header);
        std::vector<double> row = {point.knudsen};
        Metrics metrics = {{"knudsen", point.knudsen}};
        for (const auto& [name, magnitude] : point.magnitudes) {
            row.push_back(magnitude);
            metrics.emplace_back("magnitude." + name, magnitude);
        }
        summary.row(row);
        summary.close();
        std::ostringstream body;
        body << "budget group magnitudes at a single Knudsen number "
             << short_num(point.knudsen) << " (sweep several to fit the slopes)\n";
        return finish_run(config, dir, body.str(), std::move(metrics));
    }

    const auto study = analysis::knudsen_ordering_study(knudsens, profile,
                                                        config.grid_cells, config.scales);
    CsvWriter summary((dir / "summary.csv").string(), header);
    for (const auto& point : study.points) {
        std::vector<double> row = {point.knudsen};
        for (const auto& group : groups) {
            for (const auto& [name, magnitude] : point.magnitudes) {
                if (name == group) row.push_back(magnitude);
            }
        }
        summary.row(row);
    }
    summary.close();

    Metrics metrics;
    std::ostringstream body;
    body << "fitted log-log slopes of the budget group magnitudes vs. Knudsen:\n";
    for (const auto& slope : study.slopes) {
        metrics.emplace_back("slope." + slope.name, slope.slope);
        body << "  " << slope.name << ": " << short_num(slope.slope) << " (expected "
             << slope.expected_order << ")\n";
    }
    return finish_run(config, dir, body.str(), std::move(metrics));
}

// ---------------------------------------------------------------------------
// rigid-rotation-eval: rotating equilibrium constitutive checks.
// ---------------------------------------------------------------------------

RunOutcome run_rotation(const ScenarioConfig& config, const fs::path& dir) {
    require_dimensionless(config);
    if (config.initial.profile != "rigid-rotation-field") {
        throw core::ConfigError("rigid-rotation-eval needs initial.profile = "
                                "rigid-rotation-field");
    }
    const double omega = config.initial.at("omega");
    const auto knudsens = axis_values(config, "scales.knudsen");

    if (knudsens.empty()) {
        // Single sweep point: evaluate the planar constitutive fields once.
        const auto& scales = config.scales;
        const auto gas = config.gas();
        const core::TransportCoefficients coeffs(scales.mu0(), scales.kappa_m0(),
                                                 scales.kappa_h0());
        const analysis::RigidRotationField field(omega, scales.density, scales.temperature,
                                                 scales.gas_constant());
        const double half = 0.5 * scales.macroscopic_length;
        const auto eval = analysis::evaluate_planar_field(
            field, -half, half, -half, half, config.grid_cells, config.grid_cells, gas,
            coeffs);
        const double q_scale = scales.kappa_h0() * scales.temperature /
                               (scales.density * scales.macroscopic_length);
        Metrics metrics = {
            {"knudsen", scales.knudsen()},
            {"production", eval.drift_production_integral / scales.entropy_rate_scale()},
            {"max_pi_um_scaled", eval.max_pi_um / (coeffs.mu() * omega)},
            {"max_q_s_scaled", eval.max_q_s / q_scale},
            {"production_min", eval.drift_production_min},
        };
        CsvWriter summary((dir / "summary.csv").string(), {"knudsen", "production"});
        summary.row(std::vector<double>{scales.knudsen(),
                                        eval.drift_production_integral /
                                            scales.entropy_rate_scale()});
        summary.close();
        std::ostringstream body;
        body << "rotating-equilibrium evaluation at one Knudsen number "
             << short_num(scales.knudsen()) << " (sweep several to fit the slope)\n";
        return finish_run(config, dir, body.str(), std::move(metrics));
    }

    const auto study =
        analysis::rigid_rotation_study(knudsens, omega, config.grid_cells, config.scales);
    CsvWriter summary((dir / "summary.csv").string(), {"knudsen", "production"});
    for (std::size_t i = 0; i < study.knudsens.size(); ++i) {
        summary.row(std::vector<double>{study.knudsens[i], study.productions[i]});
    }
    summary.close();

    Metrics metrics = {
        {"production_slope", study.slope},
        {"max_pi_um_scaled", study.max_pi_um_scaled},
        {"max_q_s_scaled", study.max_q_s_scaled},
        {"production_min", study.production_min},
    };
    std::ostringstream body;
    body << "strain-rate stress and entropic heat flux vanish on the rotating "
         << "equilibrium: max |stress|/(mu om) = " << short_num(study.max_pi_um_scaled)
         << ", max |q_s| (reference-scaled) = " << short_num(study.max_q_s_scaled) << "\n";
    body << "drift-stress entropy production stays positive (pointwise min "
         << short_num(study.production_min) << ") and follows Knudsen slope "
         << short_num(study.slope) << " (expected 3)\n";
    return finish_run(config, dir, body.str(), std::move(metrics));
}

// ---------------------------------------------------------------------------
// Resolution-ladder scenarios (Galilean pair, center of mass, manufactured).
// ---------------------------------------------------------------------------

std::vector<int> resolution_ladder(const ScenarioConfig& config) {
    std::vector<int> cells;
    const auto values = axis_values(config, "grid.cells");
    if (values.empty()) {
        cells = {config.grid_cells, 2 * config.grid_cells, 4 * config.grid_cells};
    } else {
        for (double v : values) cells.push_back(static_cast<int>(v));
    }
    std::sort(cells.begin(), cells.end());
    if (cells.size() < 2) {
        throw core::ConfigError("resolution study needs at least two cell counts");
    }
    return cells;
}

RunOutcome run_galilean(const ScenarioConfig& config, const fs::path& dir) {
    const auto cells = resolution_ladder(config);
    const auto study = analysis::galilean_covariance_study(cells, config.model, config.gas(),
                                                           config.transport());
    CsvWriter summary((dir / "summary.csv").string(), {"cells", "mismatch"});
    Metrics metrics = {{"order", study.mismatch.order},
                       {"boost_speed", study.boost_speed}};
    for (std::size_t i = 0; i < study.mismatch.cells.size(); ++i) {
        summary.row(std::vector<double>{study.mismatch.cells[i], study.mismatch.errors[i]});
        metrics.emplace_back(
            "mismatch_n" + std::to_string(static_cast<int>(study.mismatch.cells[i])),
            study.mismatch.errors[i]);
    }
    summary.close();
    std::ostringstream body;
    body << "lab-frame vs. boosted-frame mismatch after unboosting converges at order "
         << short_num(study.mismatch.order) << " (expected 2)\n";
    return finish_run(config, dir, body.str(), std::move(metrics));
}

RunOutcome run_center_of_mass(const ScenarioConfig& config, const fs::path& dir) {
    const auto cells = resolution_ladder(config);
    const auto study =
        analysis::center_of_mass_study(cells, config.gas(), config.transport());
    CsvWriter summary((dir / "summary.csv").string(), {"cells", "residual"});
    Metrics metrics = {{"order", study.residual.order}};
    for (std::size_t i = 0; i < study.residual.cells.size(); ++i) {
        summary.row(std::vector<double>{study.residual.cells[i], study.residual.errors[i]});
        metrics.emplace_back(
            "residual_n" + std::to_string(static_cast<int>(study.residual.cells[i])),
            study.residual.errors[i]);
    }
    summary.close();
    std::ostringstream body;
    body << "center-of-mass balance residual converges at order "
         << short_num(study.residual.order) << " (expected 2)\n";
    return finish_run(config, dir, body.str(), std::move(metrics));
}

RunOutcome run_manufactured(const ScenarioConfig& config, const fs::path& dir) {
    const auto cells = resolution_ladder(config);
    const auto gas = config.gas();
    const auto coeffs = config.transport();
    if (config.initial.profile != "manufactured") {
        throw core::ConfigError("manufactured-convergence needs initial.profile = "
                                "manufactured");
    }
    analysis::ManufacturedProfile profile;
    profile.rho0 = config.initial.at("density");
    profile.u0 = config.initial.at("velocity");
    profile.T0 = config.initial.at("temperature");
    profile.rho_amp = config.initial.at("density_amplitude");
    profile.u_amp = config.initial.at("velocity_amplitude");
    profile.T_amp = config.initial.at("temperature_amplitude");
    profile.vb_amp = config.initial.at("volume_amplitude");
    profile.rho_phase = config.initial.at("density_phase");
    profile.u_phase = config.initial.at("velocity_phase");
    profile.T_phase = config.initial.at("temperature_phase");
    profile.vb_phase = config.initial.at("volume_phase");

    std::vector<double> cells_d(cells.begin(), cells.end());
    std::map<governing::ModelVariant, std::vector<double>> errors;
    std::vector<double> closure_residuals;

    for (int n : cells) {
        const auto grid = core::Grid1D::make(n, config.grid_length, config.boundary);
        for (auto variant : governing::all_variants) {
            const auto exact = analysis::manufactured_state(grid, gas, profile, variant);
            const auto source =
                analysis::manufactured_source(grid, gas, coeffs, profile, variant);
            const auto trajectory =
                solver::run(variant, exact, gas, coeffs, config.integrator, source);
            const auto& sim = trajectory.frames.back().state;
            double err = 0.0;
            for (int i = 0; i < n; ++i) {
                err = std::max(err, std::abs(gas.molecular_mass *
                                             (sim.a_n[i] - exact.a_n[i])));
                err = std::max(err, std::abs(sim.u_m[i] - exact.u_m[i]));
                err = std::max(err, std::abs(sim.e_in[i] - exact.e_in[i]));
                if (governing::has_independent_volume(variant)) {
                    err = std::max(err, std::abs(sim.v_bar[i] - exact.v_bar[i]));
                }
            }
            errors[variant].push_back(err);
        }
        // Unforced budget-closure window on the full volume model.
        auto closure_config = config.integrator;
        closure_config.t_end = 1e-3;
        closure_config.store_every = 0;
        const auto start = analysis::manufactured_state(
            grid, gas, profile, governing::ModelVariant::volume_full);
        const auto trajectory = solver::run(governing::ModelVariant::volume_full, start, gas,
                                            coeffs, closure_config);
        const auto closure = analysis::budget_closure_volume(
            trajectory.frames.front(), trajectory.frames.back(), gas, coeffs);
        closure_residuals.push_back(closure.residual_integral);
    }

    std::vector<std::string> header = {"cells"};
    for (auto variant : governing::all_variants) {
        header.push_back("error_" + governing::variant_name(variant));
    }
    header.push_back("closure_residual");
    CsvWriter summary((dir / "summary.csv").string(), header);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        std::vector<double> row = {cells_d[i]};
        for (auto variant : governing::all_variants) row.push_back(errors[variant][i]);
        row.push_back(closure_residuals[i]);
        summary.row(row);
    }
    summary.close();

    Metrics metrics;
    std::ostringstream body;
    body << "max-norm deviation from the forced steady solution, fitted order:\n";
    for (auto variant : governing::all_variants) {
        const double order = analysis::fit_convergence_order(cells_d, errors[variant]);
        metrics.emplace_back("order_" + governing::variant_name(variant), order);
        body << "  " << governing::variant_name(variant) << ": " << short_num(order)
             << "\n";
    }
    const double closure_order =
        analysis::fit_convergence_order(cells_d, closure_residuals);
    metrics.emplace_back("closure_order", closure_order);
    body << "volume-model entropy-budget closure residual order: "
         << short_num(closure_order) << " (expected >= 2)\n";
    return finish_run(config, dir, body.str(), std::move(metrics));
}

// ---------------------------------------------------------------------------
// model-reduction: coefficient-zeroing degeneracy onto the baseline.
// ---------------------------------------------------------------------------

double rhs_mismatch(const governing::StateDerivative& a, const governing::StateDerivative& b) {
    return std::max({relative_mismatch(a.density, b.density),
                     relative_mismatch(a.momentum, b.momentum),
                     relative_mismatch(a.energy, b.energy)});
}

RunOutcome run_model_reduction(const ScenarioConfig& config, const fs::path& dir) {
    require_no_axes(config);
    const auto gas = config.gas();
    const auto base = config.transport();
    const auto grid = config.grid();
    const core::TransportCoefficients no_volume(base.mu(), 0.0, base.kappa_h(),
                                                base.kappa_klim());
    const core::TransportCoefficients no_laplacian(base.mu(), base.kappa_m(), base.kappa_h(),
                                                   0.0);

    CsvWriter table((dir / "reduction.csv").string(),
                    {"seed", "reduced", "klimontovich", "volume_full"});
    double worst_reduced = 0.0, worst_klim = 0.0, worst_full = 0.0;
    for (unsigned long seed = 1; seed <= 10; ++seed) {
        const auto state = core::random_smooth_state(grid, gas, seed);
        const auto nsf =
            governing::rhs(governing::ModelVariant::nsf_baseline, state, gas, base);
        const double reduced = rhs_mismatch(
            governing::rhs(governing::ModelVariant::bivelocity_reduced, state, gas,
                           no_volume),
            nsf);
        const double klim = rhs_mismatch(
            governing::rhs(governing::ModelVariant::klimontovich, state, gas, no_laplacian),
            nsf);
        const double full = rhs_mismatch(
            governing::rhs(governing::ModelVariant::volume_full, state, gas, no_volume),
            nsf);
        table.row(std::vector<double>{static_cast<double>(seed), reduced, klim, full});
        worst_reduced = std::max(worst_reduced, reduced);
        worst_klim = std::max(worst_klim, klim);
        worst_full = std::max(worst_full, full);
    }
    table.close();

    Metrics metrics = {
        {"mismatch_reduced", worst_reduced},
        {"mismatch_klimontovich", worst_klim},
        {"mismatch_full", worst_full},
        {"mismatch_max", std::max({worst_reduced, worst_klim, worst_full})},
    };
    std::ostringstream body;
    body << "worst relative right-hand-side mismatch against the classical baseline over "
         << "10 random smooth states:\n"
         << "  reduced bivelocity (kappa_m = 0): " << short_num(worst_reduced) << "\n"
         << "  klimontovich (kappa = 0): " << short_num(worst_klim) << "\n"
         << "  full volume model (kappa_m = 0, volume identified): "
         << short_num(worst_full) << "\n";
    return finish_run(config, dir, body.str(), std::move(metrics));
}

// ---------------------------------------------------------------------------
// dispersion-scan: plane-wave branches for every variant.
// ---------------------------------------------------------------------------

std::vector<double> log_spaced(double lo, double hi, int count) {
    std::vector<double> values;
    values.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) / (count - 1);
        values.push_back(lo * std::pow(hi / lo, t));
    }
    return values;
}

RunOutcome run_dispersion(const ScenarioConfig& config, const fs::path& dir) {
    require_no_axes(config);
    const auto gas = config.gas();
    const auto coeffs = config.transport();
    const analysis::UniformBackground background{config.initial.at("density"),
                                                 config.initial.at("temperature")};
    const double c_ad = gas.sound_speed(background.T0);
    const auto omegas = log_spaced(0.05, 10.0, 30);

    CsvWriter branches((dir / "branches.csv").string(),
                       {"variant", "omega", "re_k", "im_k", "phase_speed", "attenuation",
                        "classical_attenuation"});
    std::map<governing::ModelVariant, analysis::DispersionResult> results;
    for (auto variant : governing::all_variants) {
        results[variant] =
            analysis::dispersion_relation(variant, background, gas, coeffs, omegas);
        for (const auto& point : results[variant].points) {
            branches.row(std::vector<std::string>{
                governing::variant_name(variant), format_double(point.omega),
                format_double(point.physical.real()), format_double(point.physical.imag()),
                format_double(point.phase_speed), format_double(point.attenuation),
                format_double(analysis::classical_absorption_coefficient(
                    point.omega, background, gas, coeffs))});
        }
    }
    branches.close();

    // Baseline sanity: low-frequency phase speed vs. the adiabatic sound speed.
    const auto& nsf = results[governing::ModelVariant::nsf_baseline];
    const double phase_error =
        std::abs(nsf.points.front().phase_speed - c_ad) / c_ad;

    // Zeroing kappa_m must collapse the reduced model onto the baseline
    // root-for-root (roots are sorted, so elementwise comparison is aligned).
    const core::TransportCoefficients no_volume(coeffs.mu(), 0.0, coeffs.kappa_h(),
                                                coeffs.kappa_klim());
    double root_gap = 0.0;
    for (double omega : {0.1, 1.0, 8.0}) {
        const auto base_roots = analysis::spatial_roots(
            governing::ModelVariant::nsf_baseline, background, gas, no_volume, omega);
        const auto reduced_roots = analysis::spatial_roots(
            governing::ModelVariant::bivelocity_reduced, background, gas, no_volume, omega);
        if (base_roots.size() != reduced_roots.size()) {
            root_gap = std::numeric_limits<double>::infinity();
            break;
        }
        for (std::size_t i = 0; i < base_roots.size(); ++i) {
            root_gap = std::max(root_gap, std::abs(base_roots[i] - reduced_roots[i]));
        }
    }

    // A positive kappa_m lowers the acoustic attenuation; the gap against the
    // baseline grows monotonically with frequency.
    const auto& reduced = results[governing::ModelVariant::bivelocity_reduced];
    double gap_max = 0.0;
    bool monotone = true;
    double previous = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        const double gap = nsf.points[i].attenuation - reduced.points[i].attenuation;
        gap_max = std::max(gap_max, gap);
        if (gap < previous - 1e-12) monotone = false;
        previous = gap;
    }

    Metrics metrics = {
        {"phase_speed_error_low_omega", phase_error},
        {"root_gap_kappa_m_zero", root_gap},
        {"attenuation_difference_max", gap_max},
        {"attenuation_difference_monotone", monotone ? 1.0 : 0.0},
    };
    std::ostringstream body;
    body << "baseline low-frequency phase speed within " << short_num(phase_error)
         << " of the adiabatic sound speed " << short_num(c_ad) << "\n";
    body << "reduced-model roots at kappa_m = 0 match the baseline to "
         << short_num(root_gap) << "\n";
    body << "kappa_m = " << short_num(coeffs.kappa_m())
         << " lowers the acoustic attenuation; baseline-minus-reduced gap grows to "
         << short_num(gap_max) << (monotone ? " monotonically" : " (not monotone)") << "\n";
    return finish_run(config, dir, body.str(), std::move(metrics));
}

} // namespace

// ---------------------------------------------------------------------------
// Public entry points.
// ---------------------------------------------------------------------------

double metric(const RunOutcome& outcome, const std::string& name) {
    for (const auto& [key, value] : outcome.metrics) {
        if (key == name) return value;
    }
    throw core::ValidationError("run produced no metric named '" + name + "'");
}

RunOutcome run_scenario(const ScenarioConfig& config) {
    const fs::path dir(config.output_dir);
    fs::create_directories(dir);
    write_manifest(config, dir);

    const std::string& name = config.scenario;
    if (name.empty() || name == "gaussian-pulse") return run_plain(config, dir);
    if (name == "acoustic-decay") return run_acoustic_decay(config, dir);
    if (name == "klimontovich-entropy-search") return run_klim_search(config, dir);
    if (name == "model-reduction") return run_model_reduction(config, dir);
    if (name == "dispersion-scan") return run_dispersion(config, dir);
    if (name == "kn-ordering-sweep") return run_kn_ordering(config, dir);
    if (name == "rigid-rotation-eval") return run_rotation(config, dir);
    if (name == "galilean-pair") return run_galilean(config, dir);
    if (name == "center-of-mass") return run_center_of_mass(config, dir);
    if (name == "manufactured-convergence") return run_manufactured(config, dir);
    throw core::ConfigError("unknown scenario '" + name + "'");
}

namespace {

/// Scenario-aware extra columns for the sweep summary: power-law slopes of
/// the per-run metrics across a mean-free-path axis.
Metrics summary_slopes(const ScenarioConfig& base, const std::vector<RunOutcome>& outcomes) {
    Metrics slopes;
    if (base.sweep.size() != 1 || base.sweep[0].parameter != "scales.knudsen") {
        return slopes;
    }
    std::vector<std::string> names;
    if (base.scenario == "kn-ordering-sweep") {
        names = {"magnitude.heat_conduction", "magnitude.shear_mass",
                 "magnitude.cross_mass_drift", "magnitude.cross_drift_mass",
                 "magnitude.drift_drift"};
    } else if (base.scenario == "rigid-rotation-eval") {
        names = {"production"};
    }
    for (const auto& name : names) {
        std::vector<double> kn;
        std::vector<double> values;
        for (const auto& outcome : outcomes) {
            kn.push_back(metric(outcome, "knudsen"));
            values.push_back(metric(outcome, name));
        }
        const std::string label = name.rfind("magnitude.", 0) == 0
                                      ? "slope." + name.substr(10)
                                      : name + "_slope";
        slopes.emplace_back(label, analysis::fit_loglog(kn, values).slope);
    }
    return slopes;
}

} // namespace

std::vector<RunOutcome> run_sweep(const ScenarioConfig& config, int workers_override) {
    if (config.sweep.empty()) {
        throw core::ConfigError("this configuration declares no sweep axes; run it with "
                                "the run command");
    }
    const auto runs = expand_sweep(config);
    const auto assignments = sweep_assignments(config);

    int workers = workers_override > 0 ? workers_override : config.workers;
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    workers = std::clamp<int>(workers, 1, static_cast<int>(runs.size()));

    std::vector<RunOutcome> outcomes(runs.size());
    std::vector<std::exception_ptr> failures(runs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= runs.size()) break;
            try {
                outcomes[i] = run_scenario(runs[i]);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& thread : pool) thread.join(); // join barrier before any summary I/O

    const fs::path dir(config.output_dir);
    fs::create_directories(dir);
    write_manifest(config, dir);

    // Row order: sorted by the numeric axis tuple.
    std::vector<std::size_t> order(runs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    if (!assignments.empty()) {
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            for (std::size_t axis = 0; axis < assignments[a].size(); ++axis) {
                if (assignments[a][axis].second != assignments[b][axis].second) {
                    return assignments[a][axis].second < assignments[b][axis].second;
                }
            }
            return a < b;
        });
    }

    // Columns: the axis values, the union of metric names in first-seen
    // order, then the run directory.
    std::vector<std::string> metric_names;
    std::set<std::string> seen;
    for (std::size_t i : order) {
        if (failures[i]) continue;
        for (const auto& [name, value] : outcomes[i].metrics) {
            if (seen.insert(name).second) metric_names.push_back(name);
        }
    }
    std::size_t completed = 0;
    for (const auto& failure : failures) {
        if (!failure) ++completed;
    }
    Metrics slopes;
    if (completed == runs.size()) slopes = summary_slopes(config, outcomes);

    std::vector<std::string> header;
    for (const auto& axis : config.sweep) header.push_back(axis.parameter);
    for (const auto& name : metric_names) header.push_back(name);
    for (const auto& [name, value] : slopes) header.push_back(name);
    header.push_back("run_dir");

    CsvWriter summary((dir / "summary.csv").string(), header);
    for (std::size_t i : order) {
        if (failures[i]) continue;
        std::vector<std::string> row;
        for (const auto& [key, value] : assignments[i]) row.push_back(format_double(value));
        for (const auto& name : metric_names) {
            std::string cell;
            for (const auto& [key, value] : outcomes[i].metrics) {
                if (key == name) {
                    cell = format_double(value);
                    break;
                }
            }
            row.push_back(cell);
        }
        for (const auto& [name, value] : slopes) row.push_back(format_double(value));
        row.push_back(outcomes[i].output_dir);
        summary.row(row);
    }
    summary.close();

    std::ostringstream report;
    report << (config.scenario.empty() ? std::string("sweep") : config.scenario + " sweep")
           << ": " << completed << "/" << runs.size() << " runs completed\n";
    for (std::size_t i : order) {
        if (failures[i]) {
            try {
                std::rethrow_exception(failures[i]);
            } catch (const std::exception& error) {
                report << "  " << runs[i].output_dir << ": FAILED (" << error.what()
                       << ")\n";
            }
        } else {
            report << "  " << outcomes[i].output_dir << "\n";
        }
    }
    for (const auto& [name, value] : slopes) {
        report << "  " << name << " = " << short_num(value) << "\n";
    }
    write_text(dir / "report.txt", report.str());
    if (config.emit_plot) write_text(dir / "plot.py", plot_script);

    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (failures[i]) std::rethrow_exception(failures[i]);
    }
    return outcomes;
}

// ---------------------------------------------------------------------------
// The check suite.
// ---------------------------------------------------------------------------

namespace {

struct CheckRow {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Pointwise nonnegativity of the mass-velocity dissipation over many random
/// smooth states.
CheckRow quadratic_form_check() {
    const auto gas = core::GasModel::monatomic(1.0, 1.0);
    const core::TransportCoefficients coeffs(0.005, 0.005, 0.0125, 0.004);
    const auto grid = core::Grid1D::make(64, 1.0);
    double worst = std::numeric_limits<double>::infinity();
    for (unsigned long seed = 1; seed <= 1000; ++seed) {
        const auto state = core::random_smooth_state(grid, gas, seed);
        const auto fluxes = constitutive::flux_set(state, gas, coeffs);
        const auto grad_u = core::gradient(grid, state.u_m);
        for (int i = 0; i < grid.n_cells; ++i) {
            worst = std::min(worst, -fluxes.pi_um[i] * grad_u[i]);
        }
    }
    CheckRow row;
    row.name = "dissipation-nonnegative";
    row.pass = worst >= -1e-14;
    row.detail = "pointwise min " + short_num(worst) +
                 " over 1000 random states (expect >= -1e-14)";
    return row;
}

/// The indefinite cross group of the Laplacian-diffusion model attains both
/// signs: anti-aligned gradients make it pointwise negative, a dominant
/// temperature gradient makes it pointwise positive.
CheckRow indefinite_sign_check() {
    const auto gas = core::GasModel::monatomic(1.0, 1.0);
    const core::TransportCoefficients coeffs(0.005, 0.0, 0.0125, 0.004);
    const auto grid = core::Grid1D::make(128, 1.0);
    auto curly_range = [&](double rho_amp, double T_amp, double phase) {
        core::FlowState state(grid);
        for (int i = 0; i < grid.n_cells; ++i) {
            const double arg = 2.0 * M_PI * grid.center(i);
            state.a_n[i] = 1.0 + rho_amp * std::sin(arg);
            state.u_m[i] = 0.0;
            state.e_in[i] = gas.c_v * (1.0 + T_amp * std::sin(arg + phase));
        }
        state.identify_volume_with_density();
        const auto budget = analysis::entropy_budget_klimontovich(state, gas, coeffs);
        const auto& values = budget.term("indefinite_group").values;
        const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
        return std::pair<double, double>(*lo, *hi);
    };
    const auto anti = curly_range(0.3, 0.1, M_PI);
    const auto aligned = curly_range(0.1, 0.2, 0.0);
    CheckRow row;
    row.name = "indefinite-group-both-signs";
    row.pass = anti.first < 0.0 && aligned.second > 0.0;
    row.detail = "negative " + short_num(anti.first) + " (anti-aligned), positive " +
                 short_num(aligned.second) + " (temperature-dominated)";
    return row;
}

/// The reduced-model residual term is reported and nonzero for kappa_m > 0.
CheckRow reduced_residual_check() {
    const auto gas = core::GasModel::monatomic(1.0, 1.0);
    const core::TransportCoefficients coeffs(0.005, 0.005, 0.0125);
    const auto grid = core::Grid1D::make(128, 1.0);
    const auto state = core::random_smooth_state(grid, gas, 7u);
    const auto fluxes = constitutive::flux_set(state, gas, coeffs);
    const auto budget = analysis::entropy_budget_reduced(state, fluxes, gas, coeffs);
    const double magnitude = budget.term("drift_residual").magnitude;
    CheckRow row;
    row.name = "reduced-residual-reported";
    row.pass = magnitude > 0.0;
    row.detail = "integrated |residual| " + short_num(magnitude) +
                 " on a random state with kappa_m > 0";
    return row;
}

/// Quick coefficient-zeroing degeneracy audit.
CheckRow degeneracy_check() {
    const auto gas = core::GasModel::monatomic(1.0, 1.0);
    const core::TransportCoefficients base(0.005, 0.005, 0.0125, 0.004);
    const core::TransportCoefficients no_volume(0.005, 0.0, 0.0125, 0.004);
    const core::TransportCoefficients no_laplacian(0.005, 0.005, 0.0125, 0.0);
    const auto grid = core::Grid1D::make(128, 1.0);
    double worst = 0.0;
    for (unsigned long seed = 1; seed <= 3; ++seed) {
        const auto state = core::random_smooth_state(grid, gas, seed);
        const auto nsf =
            governing::rhs(governing::ModelVariant::nsf_baseline, state, gas, base);
        worst = std::max(
            worst, rhs_mismatch(governing::rhs(governing::ModelVariant::bivelocity_reduced,
                                               state, gas, no_volume),
                                nsf));
        worst = std::max(
            worst, rhs_mismatch(governing::rhs(governing::ModelVariant::klimontovich, state,
                                               gas, no_laplacian),
                                nsf));
        worst = std::max(
            worst, rhs_mismatch(governing::rhs(governing::ModelVariant::volume_full, state,
                                               gas, no_volume),
                                nsf));
    }
    CheckRow row;
    row.name = "model-degeneracy";
    row.pass = worst < 1e-12;
    row.detail = "worst relative mismatch " + short_num(worst) + " (expect < 1e-12)";
    return row;
}

/// Short conservation audit on a compact pulse.
CheckRow conservation_check() {
    const auto gas = core::GasModel::monatomic(1.0, 1.0);
    const core::TransportCoefficients coeffs(0.005, 0.005, 0.0125, 0.004);
    const auto grid = core::Grid1D::make(128, 1.0);
    core::FlowState state(grid);
    for (int i = 0; i < grid.n_cells; ++i) {
        const double dxc = grid.center(i) - 0.5;
        state.a_n[i] = 1.0 + 0.3 * std::exp(-0.5 * dxc * dxc / (0.06 * 0.06));
        state.u_m[i] = 0.0;
        state.e_in[i] = gas.c_v;
    }
    state.identify_volume_with_density();
    solver::IntegratorConfig integrator;
    integrator.t_end = 1.0;
    integrator.max_steps = 200;
    const auto variant = governing::ModelVariant::bivelocity_reduced;
    const auto trajectory = solver::run(variant, state, gas, coeffs, integrator);
    const auto before = conserved_totals(trajectory.frames.front().state, gas, coeffs,
                                         variant);
    const auto after = conserved_totals(trajectory.frames.back().state, gas, coeffs,
                                        variant);
    const double drift = std::max(
        {std::abs(after.mass - before.mass) / std::abs(before.mass),
         std::abs(after.momentum - before.momentum) /
             (before.mass * gas.sound_speed(1.0)),
         std::abs(after.energy - before.energy) / std::abs(before.energy)});
    CheckRow row;
    row.name = "conservation-telescoping";
    row.pass = drift < 1e-10;
    row.detail = "worst relative drift " + short_num(drift) + " over 200 steps";
    return row;
}

} // namespace

std::string check_report(bool* all_passed) {
    std::vector<CheckRow> rows;

    const auto mechanical = analysis::mechanical_checks();
    {
        CheckRow row;
        row.name = "galilean-covariance-order";
        row.pass = std::abs(mechanical.galilean.mismatch.order - 2.0) <= 0.2;
        row.detail = "order " + short_num(mechanical.galilean.mismatch.order) +
                     " (expect 2.0 +/- 0.2)";
        rows.push_back(row);
    }
    {
        CheckRow row;
        row.name = "momentum-is-mass-flux";
        row.pass = mechanical.integrability.max_momentum_identity_error < 1e-12 &&
                   mechanical.integrability.max_conservation_sum < 1e-11;
        row.detail = "identity error " +
                     short_num(mechanical.integrability.max_momentum_identity_error) +
                     ", telescoped flux sum " +
                     short_num(mechanical.integrability.max_conservation_sum);
        rows.push_back(row);
    }
    {
        const auto& study = mechanical.angular_momentum;
        const double control_floor =
            *std::min_element(study.antisymmetric_residuals.begin(),
                              study.antisymmetric_residuals.end());
        CheckRow row;
        row.name = "angular-momentum-identity";
        row.pass = std::abs(study.symmetric.order - 2.0) <= 0.2 &&
                   control_floor > 0.25 * study.antisymmetric_scale;
        row.detail = "symmetric order " + short_num(study.symmetric.order) +
                     " (expect 2.0 +/- 0.2); antisymmetric control stays at " +
                     short_num(control_floor) + " (scale " +
                     short_num(study.antisymmetric_scale) + ", must not converge)";
        rows.push_back(row);
    }
    {
        CheckRow row;
        row.name = "center-of-mass-order";
        row.pass = std::abs(mechanical.center_of_mass.residual.order - 2.0) <= 0.2;
        row.detail = "order " + short_num(mechanical.center_of_mass.residual.order) +
                     " (expect 2.0 +/- 0.2)";
        rows.push_back(row);
    }
    rows.push_back(quadratic_form_check());
    rows.push_back(indefinite_sign_check());
    rows.push_back(reduced_residual_check());
    rows.push_back(degeneracy_check());
    rows.push_back(conservation_check());

    bool ok = true;
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.name.size());
    std::ostringstream out;
    for (const auto& row : rows) {
        ok = ok && row.pass;
        out << row.name << std::string(width - row.name.size() + 2, ' ')
            << (row.pass ? "PASS" : "FAIL") << "  " << row.detail << "\n";
    }
    out << (ok ? "all checks passed\n" : "CHECK FAILURES PRESENT\n");
    if (all_passed != nullptr) *all_passed = ok;
    return out.str();
}

} // namespace bivel::harness
