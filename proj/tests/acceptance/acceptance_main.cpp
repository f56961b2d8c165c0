/// @file acceptance_main.cpp
/// @brief End-to-end acceptance gate.
///
/// Each criterion prints exactly one PASS/FAIL line with the measured
/// numbers, the pinned tolerance, and the elapsed wall time against its
/// budget. The process exits nonzero if any criterion fails. All scenario
/// output bundles land under <tmp>/bivel-acceptance.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "bivel/analysis/mechanical.hpp"
#include "bivel/constitutive/fluxes.hpp"
#include "bivel/core/flow_state.hpp"
#include "bivel/harness/config.hpp"
#include "bivel/harness/runner.hpp"

using namespace bivel;
namespace fs = std::filesystem;

namespace {

fs::path output_root() {
    static const fs::path root = [] {
        const fs::path dir = fs::temp_directory_path() / "bivel-acceptance";
        fs::remove_all(dir);
        fs::create_directories(dir);
        return dir;
    }();
    return root;
}

harness::RunOutcome run(const std::string& text, const std::string& leaf) {
    auto config = harness::parse_config(text);
    config.output_dir = (output_root() / leaf).string();
    config.emit_plot = false;
    return harness::run_scenario(config);
}

std::string num(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3g", value);
    return buffer;
}

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<std::string(bool&)> body; ///< returns the detail text
};

bool run_criterion(const Criterion& criterion) {
    bool ok = true;
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    try {
        detail = criterion.body(ok);
    } catch (const std::exception& error) {
        ok = false;
        detail = std::string("exception: ") + error.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > criterion.budget_seconds) {
        ok = false;
        detail += " [over time budget]";
    }
    std::printf("%s  %-28s %s [%.2fs / budget %.0fs]\n", ok ? "PASS" : "FAIL",
                criterion.name.c_str(), detail.c_str(), elapsed, criterion.budget_seconds);
    std::fflush(stdout);
    return ok;
}

/// check = measured-vs-tolerance clause appended to the detail string.
void require(bool& ok, std::string& detail, bool condition, const std::string& clause) {
    if (!detail.empty()) detail += "; ";
    detail += clause;
    if (!condition) {
        ok = false;
        detail += " <-- FAIL";
    }
}

} // namespace

int main() {
    std::vector<Criterion> criteria;

    // 1. Zeroing the distinguishing coefficients must collapse every variant
    //    onto the classical baseline, elementwise, on random smooth states.
    criteria.push_back({"degeneracy-collapse", 1.0, [](bool& ok) {
        const auto outcome = run("scenario = model-reduction\n", "model-reduction");
        const double worst = harness::metric(outcome, "mismatch_max");
        std::string detail;
        require(ok, detail, worst < 1e-12,
                "max relative RHS mismatch " + num(worst) + " < 1e-12");
        return detail;
    }});

    // 2. Conservative fluxes telescope: after 1000 steps of the pulse run the
    //    conserved integrals drift by no more than 1e-10 relative, for every
    //    model variant.
    criteria.push_back({"conservation-telescoping", 30.0, [](bool& ok) {
        std::string detail;
        double worst = 0.0;
        for (auto variant : governing::all_variants) {
            const std::string name = governing::variant_name(variant);
            const auto outcome = run("scenario = gaussian-pulse\n"
                                     "model = " + name + "\n"
                                     "integrator.t_end = 1.0\n"
                                     "integrator.max_steps = 1000\n"
                                     "integrator.store_every = 0\n",
                                     "conservation-" + name);
            if (harness::metric(outcome, "steps") != 1000.0) {
                require(ok, detail, false, name + " did not reach 1000 steps");
                continue;
            }
            for (const char* which : {"mass_drift", "momentum_drift", "energy_drift"})
                worst = std::max(worst, harness::metric(outcome, which));
        }
        require(ok, detail, worst < 1e-10,
                "worst relative drift over 4 variants x 1000 steps " + num(worst) +
                    " < 1e-10");
        return detail;
    }});

    // 3. The entropy-budget groups follow their integer Knudsen powers across
    //    a two-decade mean-free-path sweep.
    criteria.push_back({"knudsen-power-ladder", 300.0, [](bool& ok) {
        const auto outcome = run("scenario = kn-ordering-sweep\n", "kn-ordering");
        std::string detail;
        const auto slope_near = [&](const char* group, double expected, double tol) {
            const double slope = harness::metric(outcome, std::string("slope.") + group);
            require(ok, detail, std::abs(slope - expected) <= tol,
                    std::string(group) + " " + num(slope) + " within " + num(expected) +
                        "+-" + num(tol));
        };
        slope_near("heat_conduction", 1.0, 0.1);
        slope_near("shear_mass", 1.0, 0.1);
        slope_near("cross_mass_drift", 2.0, 0.1);
        slope_near("cross_drift_mass", 2.0, 0.1);
        slope_near("drift_drift", 3.0, 0.15);
        return detail;
    }});

    // 4. On the rotating isothermal equilibrium the strain-rate stress and the
    //    entropic heat flux vanish while the drift production persists with a
    //    cubic Knudsen slope.
    criteria.push_back({"rotating-equilibrium", 10.0, [](bool& ok) {
        const auto outcome = run("scenario = rigid-rotation-eval\n", "rotation");
        std::string detail;
        const double pi_um = harness::metric(outcome, "max_pi_um_scaled");
        const double q_s = harness::metric(outcome, "max_q_s_scaled");
        const double slope = harness::metric(outcome, "production_slope");
        const double lowest = harness::metric(outcome, "production_min");
        require(ok, detail, pi_um < 1e-12, "|stress|/(mu*omega) " + num(pi_um) + " < 1e-12");
        require(ok, detail, q_s < 1e-12, "scaled |q_s| " + num(q_s) + " < 1e-12");
        require(ok, detail, std::isfinite(slope) && std::abs(slope - 3.0) <= 0.15,
                "production slope " + num(slope) + " within 3+-0.15");
        require(ok, detail, lowest >= 0.0, "pointwise production min " + num(lowest) + " >= 0");
        return detail;
    }});

    // 5. Mechanical identities: Galilean mismatch, the moment identity, and
    //    the center-of-mass law all converge at second order, and the
    //    antisymmetric control of the moment identity does not converge.
    criteria.push_back({"mechanical-identities", 120.0, [](bool& ok) {
        const auto report = analysis::mechanical_checks();
        std::string detail;
        require(ok, detail, std::abs(report.galilean.mismatch.order - 2.0) <= 0.2,
                "galilean order " + num(report.galilean.mismatch.order) + " within 2+-0.2");
        require(ok, detail, std::abs(report.angular_momentum.symmetric.order - 2.0) <= 0.2,
                "moment-identity order " + num(report.angular_momentum.symmetric.order) +
                    " within 2+-0.2");
        double control_floor = 1e300;
        for (double r : report.angular_momentum.antisymmetric_residuals)
            control_floor = std::min(control_floor, r);
        require(ok, detail,
                control_floor > 0.25 * report.angular_momentum.antisymmetric_scale,
                "antisymmetric control stays at " + num(control_floor) + " > 0.25*" +
                    num(report.angular_momentum.antisymmetric_scale));
        require(ok, detail, std::abs(report.center_of_mass.residual.order - 2.0) <= 0.2,
                "center-of-mass order " + num(report.center_of_mass.residual.order) +
                    " within 2+-0.2");
        return detail;
    }});

    // 6. Entropy sign structure: the quadratic shear production is pointwise
    //    nonnegative on 1000 random fields; the Laplacian-diffusion cross
    //    group takes both signs within the search scenario; the reduced
    //    model's indefinite residual is nonzero whenever kappa_m > 0.
    criteria.push_back({"entropy-sign-structure", 30.0, [](bool& ok) {
        std::string detail;
        const auto gas = core::GasModel::monatomic(1.0, 1.0);
        const core::TransportCoefficients coeffs(0.005, 0.005, 0.0125);
        const auto grid = core::Grid1D::make(64, 1.0);
        double dissipation_min = 1e300;
        for (unsigned long seed = 1; seed <= 1000; ++seed) {
            const auto state = core::random_smooth_state(grid, gas, seed);
            const auto fluxes = constitutive::flux_set(state, gas, coeffs);
            const auto grad_u = core::gradient(grid, state.u_m);
            for (int i = 0; i < grid.n_cells; ++i)
                dissipation_min = std::min(dissipation_min, -fluxes.pi_um[i] * grad_u[i]);
        }
        require(ok, detail, dissipation_min >= -1e-14,
                "shear production min over 1000 random fields " + num(dissipation_min) +
                    " >= -1e-14");

        const auto outcome = run("scenario = klimontovich-entropy-search\n", "klim-search");
        const double lo = harness::metric(outcome, "curly_min");
        const double hi = harness::metric(outcome, "curly_max");
        require(ok, detail, lo < 0.0 && hi > 0.0,
                "indefinite group spans [" + num(lo) + ", " + num(hi) + "] (both signs)");
        const double residual = harness::metric(outcome, "reduced_residual_magnitude");
        require(ok, detail, residual > 0.0,
                "reduced-model residual " + num(residual) + " > 0 at kappa_m > 0");
        return detail;
    }});

    // 7 + 9 share one manufactured-convergence execution.
    const auto manufactured = std::make_shared<harness::RunOutcome>();

    // 7. The two-snapshot entropy-budget closure converges at fitted order
    //    >= 2 across three resolutions.
    criteria.push_back({"budget-closure-order", 60.0, [manufactured](bool& ok) {
        *manufactured = run("scenario = manufactured-convergence\n", "manufactured");
        const double order = harness::metric(*manufactured, "closure_order");
        std::string detail;
        require(ok, detail, order >= 2.0, "closure residual order " + num(order) + " >= 2");
        return detail;
    }});

    // 8. Plane-wave structure: the classical baseline propagates at the
    //    adiabatic sound speed at low frequency; switching the drift off
    //    reproduces the baseline roots; switching it on lowers the
    //    attenuation, monotonically in frequency.
    criteria.push_back({"acoustic-dispersion", 5.0, [](bool& ok) {
        const auto outcome = run("scenario = dispersion-scan\n", "dispersion");
        std::string detail;
        const double phase = harness::metric(outcome, "phase_speed_error_low_omega");
        require(ok, detail, phase < 0.005,
                "low-frequency phase-speed error " + num(phase) + " < 0.5%");
        const double gap = harness::metric(outcome, "root_gap_kappa_m_zero");
        require(ok, detail, gap < 1e-10,
                "root gap at kappa_m = 0 " + num(gap) + " < 1e-10");
        const double diff = harness::metric(outcome, "attenuation_difference_max");
        const bool monotone = harness::metric(outcome, "attenuation_difference_monotone") == 1.0;
        require(ok, detail, diff > 0.0 && monotone,
                "attenuation drop " + num(diff) + " > 0 and monotone in frequency");
        return detail;
    }});

    // 9. Every variant integrates its manufactured steady solution at spatial
    //    order >= 1.8 (2 within the fit tolerance).
    criteria.push_back({"manufactured-order", 120.0, [manufactured](bool& ok) {
        std::string detail;
        if (manufactured->metrics.empty())
            *manufactured = run("scenario = manufactured-convergence\n", "manufactured");
        for (auto variant : governing::all_variants) {
            const std::string name = governing::variant_name(variant);
            const double order = harness::metric(*manufactured, "order_" + name);
            require(ok, detail, order >= 1.8, name + " " + num(order) + " >= 1.8");
        }
        return detail;
    }});

    int failures = 0;
    for (const auto& criterion : criteria)
        if (!run_criterion(criterion)) ++failures;

    if (failures == 0) {
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
    return 1;
}
