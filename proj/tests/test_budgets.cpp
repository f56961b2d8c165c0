/// @file test_budgets.cpp
/// @brief Entropy-rate budgets: term structure, sign properties, independent
/// reassembly, and the two-snapshot closure.

#include <doctest.h>

#include <cmath>

#include "bivel/analysis/entropy_budget.hpp"
#include "bivel/analysis/fit.hpp"
#include "bivel/analysis/manufactured.hpp"
#include "bivel/core/errors.hpp"
#include "bivel/solver/integrator.hpp"
#include "oracle_stencils.hpp"

using namespace bivel;

namespace {

const core::GasModel gas = core::GasModel::monatomic(1.0, 1.0);

core::FlowState trig_state(const core::Grid1D& grid, double rho_amp, double u_amp,
                           double T_amp, double T_phase) {
    core::FlowState state(grid);
    for (int i = 0; i < grid.n_cells; ++i) {
        const double arg = 2.0 * M_PI * grid.center(i) / grid.length;
        state.a_n[i] = (1.0 + rho_amp * std::sin(arg)) / gas.molecular_mass;
        state.u_m[i] = u_amp * std::sin(arg + 0.7);
        state.e_in[i] = gas.c_v * (1.0 + T_amp * std::sin(arg + T_phase));
    }
    state.identify_volume_with_density();
    return state;
}

core::FlowState uniform_state(const core::Grid1D& grid) {
    core::FlowState state(grid);
    for (int i = 0; i < grid.n_cells; ++i) {
        state.a_n[i] = 1.0;
        state.u_m[i] = 0.3;
        state.e_in[i] = gas.c_v;
    }
    state.identify_volume_with_density();
    return state;
}

} // namespace

TEST_CASE("all three budgets vanish identically on a uniform state") {
    const auto grid = core::Grid1D::make(64, 1.0);
    const auto state = uniform_state(grid);
    const core::TransportCoefficients coeffs(0.005, 0.005, 0.0125, 0.004);
    const auto fluxes = constitutive::flux_set(state, gas, coeffs);

    for (const auto& budget :
         {analysis::entropy_budget_volume(state, fluxes, gas, coeffs),
          analysis::entropy_budget_klimontovich(state, gas, coeffs),
          analysis::entropy_budget_reduced(state, fluxes, gas, coeffs)}) {
        for (const auto& term : budget.terms) {
            CHECK(term.integral == doctest::Approx(0.0));
            CHECK(term.magnitude == doctest::Approx(0.0));
        }
        CHECK(budget.total_integral == doctest::Approx(0.0));
    }
}

TEST_CASE("the volume budget's totals assemble from its terms") {
    const auto grid = core::Grid1D::make(96, 1.0);
    const auto state = trig_state(grid, 0.3, 0.2, 0.1, 1.9);
    const core::TransportCoefficients coeffs(0.005, 0.004, 0.0125);
    const auto fluxes = constitutive::flux_set(state, gas, coeffs);
    const auto budget = analysis::entropy_budget_volume(state, fluxes, gas, coeffs);

    REQUIRE(budget.terms.size() == 5);
    CHECK(budget.term("heat_conduction").knudsen_order == 1);
    CHECK(budget.term("shear_mass").knudsen_order == 1);
    CHECK(budget.term("cross_mass_drift").knudsen_order == 2);
    CHECK(budget.term("cross_drift_mass").knudsen_order == 2);
    CHECK(budget.term("drift_drift").knudsen_order == 3);
    CHECK_THROWS_AS(budget.term("nope"), core::ValidationError);

    for (int i = 0; i < grid.n_cells; ++i) {
        double sum = 0.0;
        for (const auto& term : budget.terms) sum += term.values[i];
        CHECK(budget.total[i] == doctest::Approx(sum).epsilon(1e-12));
    }
    double integral_sum = 0.0;
    for (const auto& term : budget.terms) integral_sum += term.integral;
    CHECK(budget.total_integral == doctest::Approx(integral_sum).epsilon(1e-12));
}

TEST_CASE("the quadratic production terms of the volume budget are pointwise nonnegative") {
    const auto grid = core::Grid1D::make(96, 1.0);
    const core::TransportCoefficients coeffs(0.005, 0.004, 0.0125);
    for (unsigned long seed = 1; seed <= 20; ++seed) {
        const auto state = core::random_smooth_state(grid, gas, seed);
        const auto fluxes = constitutive::flux_set(state, gas, coeffs);
        const auto budget = analysis::entropy_budget_volume(state, fluxes, gas, coeffs);
        for (double v : budget.term("shear_mass").values) CHECK(v >= 0.0);
        for (double v : budget.term("drift_drift").values) CHECK(v >= 0.0);
    }
}

TEST_CASE("zero volume diffusivity empties the drift groups of the volume budget") {
    const auto grid = core::Grid1D::make(96, 1.0);
    const auto state = trig_state(grid, 0.3, 0.2, 0.1, 1.9);
    const core::TransportCoefficients coeffs(0.005, 0.0, 0.0125);
    const auto fluxes = constitutive::flux_set(state, gas, coeffs);
    const auto budget = analysis::entropy_budget_volume(state, fluxes, gas, coeffs);
    CHECK(budget.term("cross_mass_drift").magnitude == 0.0);
    CHECK(budget.term("cross_drift_mass").magnitude == 0.0);
    CHECK(budget.term("drift_drift").magnitude == 0.0);
    CHECK(budget.term("shear_mass").magnitude > 0.0);
    CHECK(budget.term("heat_conduction").magnitude > 0.0);
}

TEST_CASE("volume budget terms match an independent high-order reassembly") {
    const auto grid = core::Grid1D::make(512, 1.0);
    const auto state = trig_state(grid, 0.3, 0.2, 0.1, 1.9);
    const core::TransportCoefficients coeffs(0.005, 0.004, 0.0125);
    const auto fluxes = constitutive::flux_set(state, gas, coeffs);
    const auto derived = core::derived_quantities(state, gas);
    const auto budget = analysis::entropy_budget_volume(state, fluxes, gas, coeffs);
    const int n = grid.n_cells;

    // Rebuild from scratch with 4th-order stencils and exact constitutive
    // forms evaluated on the analytic-state fields.
    const auto grad_T = oracle::gradient4(grid, derived.temperature);
    const auto grad_u = oracle::gradient4(grid, state.u_m);
    const auto grad_rho = oracle::gradient4(grid, derived.rho_bar);
    std::vector<double> heat_arg(n), jv(n);
    for (int i = 0; i < n; ++i) {
        jv[i] = coeffs.kappa_m() * grad_rho[i] / derived.rho_bar[i];
        heat_arg[i] =
            state.a_n[i] / derived.rho_bar[i] * coeffs.kappa_h() * grad_T[i];
    }
    const auto heat_div = oracle::gradient4(grid, heat_arg);
    const auto grad_jv = oracle::gradient4(grid, jv);

    std::vector<double> heat_ref(n), shear_ref(n), drift_ref(n);
    for (int i = 0; i < n; ++i) {
        const double a_over_rho = state.a_n[i] / derived.rho_bar[i];
        const double visc = (4.0 / 3.0) * coeffs.mu();
        heat_ref[i] = heat_div[i];
        shear_ref[i] = a_over_rho * visc * grad_u[i] * grad_u[i];
        drift_ref[i] = a_over_rho * visc * grad_jv[i] * grad_jv[i];
    }
    const double dx2 = grid.dx() * grid.dx();
    CHECK(oracle::max_gap(budget.term("heat_conduction").values, heat_ref) < 3e3 * dx2);
    CHECK(oracle::max_gap(budget.term("shear_mass").values, shear_ref) < 3e3 * dx2);
    CHECK(oracle::max_gap(budget.term("drift_drift").values, drift_ref) < 3e3 * dx2);
}

TEST_CASE("the Klimontovich total vanishes discretely on isothermal still states") {
    // With uniform temperature and zero velocity the production groups and
    // the divergence groups cancel exactly under periodic summation by parts.
    const auto grid = core::Grid1D::make(128, 1.0);
    const core::TransportCoefficients coeffs(0.005, 0.0, 0.0125, 0.004);
    const auto state = trig_state(grid, 0.4, 0.0, 0.0, 0.0);
    const auto budget = analysis::entropy_budget_klimontovich(state, gas, coeffs);
    CHECK(std::abs(budget.total_integral) < 1e-13);
    // The pointwise field is not zero - only its integral.
    CHECK(core::max_abs(budget.total) > 1e-6);
}

TEST_CASE("anti-aligned density and temperature gradients drive the Klimontovich total negative") {
    const auto grid = core::Grid1D::make(256, 1.0);
    const core::TransportCoefficients coeffs(0.005, 0.0, 0.0125, 0.004);
    const auto state = trig_state(grid, 0.5, 0.0, 0.05, M_PI);
    const auto budget = analysis::entropy_budget_klimontovich(state, gas, coeffs);
    CHECK(budget.total_integral < -1e-4);

    // Aligned gradients with a dominant temperature variation push the
    // indefinite group positive instead.
    const auto aligned = trig_state(grid, 0.1, 0.0, 0.2, 0.0);
    const auto aligned_budget = analysis::entropy_budget_klimontovich(aligned, gas, coeffs);
    double lo = 1e300, hi = -1e300;
    for (double v : aligned_budget.term("indefinite_group").values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(hi > 0.0);
    for (double v : budget.term("indefinite_group").values) lo = std::min(lo, v);
    CHECK(lo < 0.0);
}

TEST_CASE("the Klimontovich indefinite group matches its closed form") {
    const auto grid = core::Grid1D::make(512, 1.0);
    const core::TransportCoefficients coeffs(0.005, 0.0, 0.0125, 0.004);
    const auto state = trig_state(grid, 0.3, 0.1, 0.1, M_PI / 2.0);
    const auto derived = core::derived_quantities(state, gas);
    const auto budget = analysis::entropy_budget_klimontovich(state, gas, coeffs);
    const int n = grid.n_cells;

    const auto grad_rho = oracle::gradient4(grid, derived.rho_bar);
    const auto grad_T = oracle::gradient4(grid, derived.temperature);
    std::vector<double> curly_ref(n);
    for (int i = 0; i < n; ++i) {
        curly_ref[i] = 2.0 * coeffs.kappa_klim() * gas.c_v / derived.temperature[i] *
                           grad_rho[i] * grad_T[i] -
                       coeffs.kappa_klim() * gas.gas_constant / derived.rho_bar[i] *
                           grad_rho[i] * grad_rho[i];
    }
    const double dx2 = grid.dx() * grid.dx();
    CHECK(oracle::max_gap(budget.term("indefinite_group").values, curly_ref) < 3e3 * dx2);
}

TEST_CASE("the reduced budget's residual appears exactly when kappa_m is positive") {
    const auto grid = core::Grid1D::make(128, 1.0);
    const auto state = trig_state(grid, 0.3, 0.15, 0.1, 1.9);

    const core::TransportCoefficients without(0.005, 0.0, 0.0125);
    const auto f0 = constitutive::flux_set(state, gas, without);
    const auto b0 = analysis::entropy_budget_reduced(state, f0, gas, without);
    CHECK(b0.term("drift_residual").magnitude == 0.0);
    for (double v : b0.term("definite_production").values) CHECK(v >= 0.0);

    const core::TransportCoefficients with(0.005, 0.005, 0.0125);
    const auto f1 = constitutive::flux_set(state, gas, with);
    const auto b1 = analysis::entropy_budget_reduced(state, f1, gas, with);
    CHECK(b1.term("drift_residual").magnitude > 0.0);
    for (double v : b1.term("definite_production").values) CHECK(v >= -1e-16);
}

TEST_CASE("the two-snapshot closure converges at second order") {
    const core::TransportCoefficients coeffs(0.005, 0.005, 0.0125);
    const analysis::ManufacturedProfile profile;
    std::vector<double> cells, residuals;
    for (int n : {64, 128, 256}) {
        const auto grid = core::Grid1D::make(n, 1.0);
        const auto start = analysis::manufactured_state(grid, gas, profile,
                                                        governing::ModelVariant::volume_full);
        solver::IntegratorConfig config;
        config.t_end = 1e-3;
        const auto trajectory = solver::run(governing::ModelVariant::volume_full, start, gas,
                                            coeffs, config);
        const auto closure = analysis::budget_closure_volume(trajectory.initial(),
                                                             trajectory.final(), gas, coeffs);
        // At the finest resolution the residual must be small against the
        // balance itself, not merely shrinking.
        if (n == 256)
            CHECK(closure.residual_integral <
                  0.1 * std::max(std::abs(closure.lhs_integral),
                                 std::abs(closure.rhs_integral)));
        cells.push_back(n);
        residuals.push_back(closure.residual_integral);
    }
    CHECK(analysis::fit_convergence_order(cells, residuals) >= 2.0);
}
