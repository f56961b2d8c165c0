/// @file test_analysis.cpp
/// @brief Fitting utilities, manufactured profiles, and planar prescribed
/// fields.

#include <doctest.h>

#include <cmath>
#include <vector>

#include "bivel/analysis/fit.hpp"
#include "bivel/analysis/manufactured.hpp"
#include "bivel/analysis/prescribed_field.hpp"
#include "bivel/core/errors.hpp"

using namespace bivel;

namespace {
const core::GasModel gas = core::GasModel::monatomic(1.0, 1.0);
} // namespace

TEST_CASE("a straight line is fitted exactly") {
    std::vector<double> x{1.0, 2.0, 3.0, 4.0, 5.0};
    std::vector<double> y;
    for (double xi : x) y.push_back(3.0 * xi - 2.0);
    const auto fit = analysis::fit_line(x, y);
    CHECK(fit.slope == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("a pure power law is fitted exactly on log-log axes") {
    std::vector<double> x{0.5, 1.0, 2.0, 4.0};
    std::vector<double> y;
    for (double xi : x) y.push_back(5.0 * std::pow(xi, 2.5));
    const auto fit = analysis::fit_loglog(x, y);
    CHECK(fit.slope == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(std::exp(fit.intercept) == doctest::Approx(5.0).epsilon(1e-10));
    CHECK_THROWS_AS(analysis::fit_loglog({1.0, -1.0}, {1.0, 1.0}), core::ValidationError);
    CHECK_THROWS_AS(analysis::fit_line({1.0}, {1.0, 2.0}), core::ValidationError);
}

TEST_CASE("convergence orders come from errors against resolution") {
    std::vector<double> cells{32.0, 64.0, 128.0};
    std::vector<double> errors;
    for (double n : cells) errors.push_back(7.0 / (n * n));
    CHECK(analysis::fit_convergence_order(cells, errors) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK_THROWS_AS(analysis::fit_convergence_order(cells, {1e-3, 0.0, 1e-5}),
                    core::ValidationError);
}

TEST_CASE("manufactured states carry an independent volume only in the full model") {
    const auto grid = core::Grid1D::make(64, 1.0);
    const analysis::ManufacturedProfile profile;

    const auto full = analysis::manufactured_state(grid, gas, profile,
                                                   governing::ModelVariant::volume_full);
    const auto reduced = analysis::manufactured_state(
        grid, gas, profile, governing::ModelVariant::bivelocity_reduced);

    double full_drift = 0.0, reduced_drift = 0.0;
    for (int i = 0; i < grid.n_cells; ++i) {
        full_drift = std::max(full_drift, std::abs(full.v_bar[i] * full.a_n[i] - 1.0));
        reduced_drift =
            std::max(reduced_drift, std::abs(reduced.v_bar[i] * reduced.a_n[i] - 1.0));
    }
    CHECK(full_drift > 1e-3);      // vb_amp decouples the volume from the density
    CHECK(reduced_drift < 1e-14);  // identified variants keep v_bar = 1 / A_n

    // Profile evaluators match the sampled fields at cell centers.
    for (int i : {0, 17, 63}) {
        const double x = grid.center(i);
        CHECK(full.a_n[i] * gas.molecular_mass ==
              doctest::Approx(profile.density_at(x, grid.length)).epsilon(1e-14));
        CHECK(full.u_m[i] == doctest::Approx(profile.velocity_at(x, grid.length)).epsilon(1e-14));
        CHECK(full.e_in[i] ==
              doctest::Approx(gas.c_v * profile.temperature_at(x, grid.length)).epsilon(1e-14));
    }
}

TEST_CASE("the rigid-rotation equilibrium produces no viscous stress and no entropic heat flux") {
    const double omega = 0.5;
    const analysis::RigidRotationField field(omega, 1.0, 1.0, 1.0);

    // Closed-form checks of the field itself.
    CHECK(field.density(0.0, 0.0) == doctest::Approx(1.0));
    const double r2 = 0.3 * 0.3 + 0.4 * 0.4;
    CHECK(field.density(0.3, 0.4) ==
          doctest::Approx(std::exp(omega * omega * r2 / 2.0)).epsilon(1e-12));
    const auto u = field.velocity(0.3, 0.4);
    CHECK(u[0] == doctest::Approx(-omega * 0.4));
    CHECK(u[1] == doctest::Approx(omega * 0.3));

    const core::TransportCoefficients coeffs(0.01, 0.01, 0.025);
    const auto eval =
        analysis::evaluate_planar_field(field, -0.5, 0.5, -0.5, 0.5, 24, 24, gas, coeffs);
    CHECK(eval.nx == 24);
    CHECK(eval.ny == 24);
    CHECK(eval.max_pi_um < 1e-12 * coeffs.mu() * omega);
    CHECK(eval.max_q_s < 1e-12);
    CHECK(eval.max_asymmetry < 1e-12);
    CHECK(eval.drift_production_min >= 0.0);
    CHECK(eval.drift_production_integral > 0.0);
    REQUIRE(eval.drift_production.size() == 24u * 24u);
}

TEST_CASE("the rotation sweep fits a cubic Knudsen slope") {
    const std::vector<double> knudsens{1e-3, 3e-3, 1e-2, 3e-2};
    const auto study =
        analysis::rigid_rotation_study(knudsens, 0.5, 16, analysis::ReferenceScales{});
    REQUIRE(study.productions.size() == 4);
    for (double p : study.productions) CHECK(p > 0.0);
    CHECK(std::abs(study.slope - 3.0) <= 0.15);
    CHECK(study.max_pi_um_scaled < 1e-12);
    CHECK(study.max_q_s_scaled < 1e-12);
    CHECK(study.production_min >= 0.0);
    CHECK_THROWS_AS(
        analysis::rigid_rotation_study({1e-3, 1e-2}, 0.5, 16, analysis::ReferenceScales{}),
        core::ValidationError);
}

TEST_CASE("differencing fallbacks of planar specs track analytic derivatives") {
    // A spec that overrides only the value callbacks, forcing the base-class
    // finite-difference fallbacks to supply every derivative.
    class NumericalRotation : public analysis::PlanarFieldSpec {
    public:
        explicit NumericalRotation(const analysis::RigidRotationField& exact)
            : exact_(exact) {}
        double density(double x, double y) const override { return exact_.density(x, y); }
        double temperature(double x, double y) const override {
            return exact_.temperature(x, y);
        }
        std::array<double, 2> velocity(double x, double y) const override {
            return exact_.velocity(x, y);
        }

    private:
        const analysis::RigidRotationField& exact_;
    };

    const analysis::RigidRotationField exact(0.5, 1.0, 1.0, 1.0);
    const NumericalRotation numerical(exact);
    const auto g_exact = exact.density_gradient(0.2, -0.3);
    const auto g_num = numerical.density_gradient(0.2, -0.3);
    CHECK(g_num[0] == doctest::Approx(g_exact[0]).epsilon(1e-9));
    CHECK(g_num[1] == doctest::Approx(g_exact[1]).epsilon(1e-9));
    const auto h_exact = exact.density_hessian(0.2, -0.3);
    const auto h_num = numerical.density_hessian(0.2, -0.3);
    for (int i = 0; i < 3; ++i)
        CHECK(h_num[i] == doctest::Approx(h_exact[i]).epsilon(1e-6));
}
