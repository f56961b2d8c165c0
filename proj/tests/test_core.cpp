/// @file test_core.cpp
/// @brief Grid operators, gas closure, transport coefficients, state validation.

#include <doctest.h>

#include <cmath>

#include "bivel/core/errors.hpp"
#include "bivel/core/flow_state.hpp"
#include "bivel/core/gas_model.hpp"
#include "bivel/core/grid.hpp"
#include "bivel/core/transport.hpp"

using namespace bivel;

namespace {

core::Field sampled(const core::Grid1D& grid, double (*f)(double)) {
    core::Field out(grid.n_cells);
    for (int i = 0; i < grid.n_cells; ++i) out[i] = f(grid.center(i));
    return out;
}

} // namespace

TEST_CASE("grid construction validates its inputs") {
    CHECK_THROWS_AS(core::Grid1D::make(4, 1.0), core::ValidationError);
    CHECK_THROWS_AS(core::Grid1D::make(64, 0.0), core::ValidationError);
    CHECK_THROWS_AS(core::Grid1D::make(64, -1.0), core::ValidationError);

    const auto grid = core::Grid1D::make(10, 2.0);
    CHECK(grid.dx() == doctest::Approx(0.2));
    CHECK(grid.center(0) == doctest::Approx(0.1));
    CHECK(grid.center(9) == doctest::Approx(1.9));
    CHECK(grid.centers().size() == 10);
}

TEST_CASE("periodic gradient converges at second order on a smooth field") {
    double previous_error = 0.0;
    for (int n : {64, 128}) {
        const auto grid = core::Grid1D::make(n, 1.0);
        core::Field f(n), exact(n);
        for (int i = 0; i < n; ++i) {
            const double x = grid.center(i);
            f[i] = std::sin(2.0 * M_PI * x);
            exact[i] = 2.0 * M_PI * std::cos(2.0 * M_PI * x);
        }
        const auto g = core::gradient(grid, f);
        double error = 0.0;
        for (int i = 0; i < n; ++i) error = std::max(error, std::abs(g[i] - exact[i]));
        if (previous_error > 0.0) {
            CHECK(previous_error / error == doctest::Approx(4.0).epsilon(0.05));
        }
        previous_error = error;
    }
}

TEST_CASE("reflective gradient is exact on linear fields at the boundaries") {
    const auto grid = core::Grid1D::make(16, 1.0, core::Boundary::reflective);
    core::Field f(16);
    for (int i = 0; i < 16; ++i) f[i] = 3.0 * grid.center(i) - 1.0;
    const auto g = core::gradient(grid, f);
    for (double v : g) CHECK(v == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("periodic flux divergence telescopes to round-off") {
    const auto grid = core::Grid1D::make(128, 1.0);
    const auto flux = sampled(grid, +[](double x) {
        return std::exp(std::sin(2.0 * M_PI * x)) + 0.3 * std::cos(4.0 * M_PI * x);
    });
    const auto div = core::divergence(grid, flux);
    CHECK(std::abs(core::integrate(grid, div)) < 1e-14);
}

TEST_CASE("quadrature helpers integrate and bound fields") {
    const auto grid = core::Grid1D::make(256, 2.0);
    const auto f = sampled(grid, +[](double x) { return std::sin(M_PI * x); });
    CHECK(core::integrate(grid, f) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(core::integrate_abs(grid, f) == doctest::Approx(4.0 / M_PI).epsilon(1e-4));
    CHECK(core::max_abs(f) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("monatomic gas ties pressure, temperature, and sound speed together") {
    CHECK_THROWS_AS(core::GasModel::monatomic(0.0, 1.0), core::ValidationError);
    CHECK_THROWS_AS(core::GasModel::monatomic(1.0, -1.0), core::ValidationError);

    const auto gas = core::GasModel::monatomic(2.0, 0.5);
    CHECK(gas.c_v == doctest::Approx(0.75));
    CHECK(gas.gamma() == doctest::Approx(5.0 / 3.0));
    CHECK(gas.c_p() - gas.c_v == doctest::Approx(gas.gas_constant));

    // p = (2/3) rho e and p = rho R T must be the same statement.
    const double rho = 1.7, e_in = 2.3;
    CHECK(gas.pressure(rho, e_in) ==
          doctest::Approx(rho * gas.gas_constant * gas.temperature(e_in)));
    CHECK(gas.sound_speed(3.0) == doctest::Approx(std::sqrt(gas.gamma() * 0.5 * 3.0)));
}

TEST_CASE("pressure times specific volume equals two thirds of molecular internal energy") {
    const auto gas = core::GasModel::monatomic(1.4, 0.9);
    const auto grid = core::Grid1D::make(32, 1.0);
    const auto state = core::random_smooth_state(grid, gas, 42u);
    const auto derived = core::derived_quantities(state, gas);
    for (int i = 0; i < grid.n_cells; ++i) {
        CHECK(derived.pressure[i] * state.v_bar[i] ==
              doctest::Approx((2.0 / 3.0) * gas.molecular_mass * state.e_in[i])
                  .epsilon(1e-14));
    }
}

TEST_CASE("transport coefficients keep the volume viscosity tied to the shear viscosity") {
    CHECK_THROWS_AS(core::TransportCoefficients(-1.0, 0.0, 0.0), core::ValidationError);
    CHECK_THROWS_AS(core::TransportCoefficients(1.0, -0.1, 0.0), core::ValidationError);

    const core::TransportCoefficients coeffs(0.006, 0.004, 0.0125, 0.003);
    CHECK(coeffs.eta() == doctest::Approx((2.0 / 3.0) * coeffs.mu()));
    CHECK(coeffs.longitudinal_at(1.0) == doctest::Approx((4.0 / 3.0) * coeffs.mu()));
    CHECK(coeffs.kappa_klim() == doctest::Approx(0.003));

    const core::TransportCoefficients power(0.01, 0.0, 0.0, 0.0, 0.8, 2.0);
    CHECK(power.mu_at(2.0) == doctest::Approx(0.01));
    CHECK(power.mu_at(8.0) == doctest::Approx(0.01 * std::pow(4.0, 0.8)));
    CHECK(power.eta_at(8.0) == doctest::Approx((2.0 / 3.0) * power.mu_at(8.0)));
}

TEST_CASE("state validation names the offending field") {
    const auto grid = core::Grid1D::make(16, 1.0);
    const auto gas = core::GasModel::monatomic(1.0, 1.0);
    auto state = core::random_smooth_state(grid, gas, 3u);
    CHECK(core::validate(state).ok);

    state.e_in[5] = -1.0;
    const auto report = core::validate(state);
    CHECK_FALSE(report.ok);
    REQUIRE(report.messages.size() == 1);
    CHECK(report.messages[0].find("e_in") != std::string::npos);

    state.e_in[5] = 1.0;
    state.u_m[2] = std::nan("");
    CHECK_FALSE(core::validate(state).ok);
}

TEST_CASE("random smooth states are deterministic in the seed and physically valid") {
    const auto grid = core::Grid1D::make(64, 1.0);
    const auto gas = core::GasModel::monatomic(1.0, 1.0);
    const auto a = core::random_smooth_state(grid, gas, 11u);
    const auto b = core::random_smooth_state(grid, gas, 11u);
    const auto c = core::random_smooth_state(grid, gas, 12u);
    CHECK(a.a_n == b.a_n);
    CHECK(a.u_m == b.u_m);
    CHECK(a.e_in == b.e_in);
    CHECK(a.a_n != c.a_n);
    CHECK(core::validate(a).ok);
    CHECK(core::validate(c).ok);
}

TEST_CASE("identifying volume with density sets v_bar to the reciprocal number density") {
    const auto grid = core::Grid1D::make(16, 1.0);
    const auto gas = core::GasModel::monatomic(1.0, 1.0);
    auto state = core::random_smooth_state(grid, gas, 5u);
    state.identify_volume_with_density();
    for (int i = 0; i < grid.n_cells; ++i) {
        CHECK(state.v_bar[i] * state.a_n[i] == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("divergence errors carry the failure time and step") {
    const core::DivergenceError error("boom", 1.5, 42);
    CHECK(error.time == doctest::Approx(1.5));
    CHECK(error.step == 42);
    CHECK(std::string(error.what()) == "boom");
}
