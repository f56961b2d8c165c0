/// @file test_governing.cpp
/// @brief Model hierarchy: degeneracy, conservation structure, conserved-variable
/// mapping, and agreement with the analytic source terms.

#include <doctest.h>

#include <cmath>

#include "bivel/analysis/manufactured.hpp"
#include "bivel/constitutive/fluxes.hpp"
#include "bivel/governing/rhs.hpp"
#include "oracle_stencils.hpp"

using namespace bivel;

namespace {

const core::GasModel gas = core::GasModel::monatomic(1.0, 1.0);

double max_rhs_gap(const governing::StateDerivative& a, const governing::StateDerivative& b) {
    return std::max({oracle::max_gap(a.density, b.density),
                     oracle::max_gap(a.momentum, b.momentum),
                     oracle::max_gap(a.energy, b.energy)});
}

} // namespace

TEST_CASE("variant names round-trip and reject unknowns") {
    for (auto variant : governing::all_variants) {
        const auto name = governing::variant_name(variant);
        REQUIRE(governing::variant_from_name(name).has_value());
        CHECK(*governing::variant_from_name(name) == variant);
    }
    CHECK_FALSE(governing::variant_from_name("euler").has_value());
    CHECK(governing::has_independent_volume(governing::ModelVariant::volume_full));
    CHECK_FALSE(governing::has_independent_volume(governing::ModelVariant::klimontovich));
}

TEST_CASE("zeroing the extension coefficients collapses every variant onto the baseline") {
    const auto grid = core::Grid1D::make(128, 1.0);
    const core::TransportCoefficients base(0.005, 0.005, 0.0125, 0.004);
    const core::TransportCoefficients no_volume(0.005, 0.0, 0.0125, 0.004);
    const core::TransportCoefficients no_laplacian(0.005, 0.005, 0.0125, 0.0);

    for (unsigned long seed = 1; seed <= 5; ++seed) {
        const auto state = core::random_smooth_state(grid, gas, seed);
        const auto nsf =
            governing::rhs(governing::ModelVariant::nsf_baseline, state, gas, base);

        // The reduced and Klimontovich variants share the baseline's code path
        // term by term, so the collapse is exact in floating point.
        CHECK(max_rhs_gap(governing::rhs(governing::ModelVariant::bivelocity_reduced,
                                         state, gas, no_volume),
                          nsf) == 0.0);
        CHECK(max_rhs_gap(governing::rhs(governing::ModelVariant::klimontovich, state, gas,
                                         no_laplacian),
                          nsf) == 0.0);

        // The full volume variant evaluates an independently stored v_bar, so
        // the collapse holds to round-off rather than bit-exactly.
        const auto full =
            governing::rhs(governing::ModelVariant::volume_full, state, gas, no_volume);
        double scale = 0.0;
        for (double v : nsf.energy) scale = std::max(scale, std::abs(v));
        CHECK(max_rhs_gap(full, nsf) < 1e-12 * std::max(scale, 1.0));
    }
}

TEST_CASE("the conservative right-hand sides telescope to zero on periodic grids") {
    const auto grid = core::Grid1D::make(96, 1.0);
    const core::TransportCoefficients coeffs(0.005, 0.005, 0.0125, 0.004);
    for (auto variant : governing::all_variants) {
        const auto state = core::random_smooth_state(grid, gas, 17u);
        const auto d = governing::rhs(variant, state, gas, coeffs);
        CHECK(std::abs(core::integrate(grid, d.density)) < 1e-13);
        CHECK(std::abs(core::integrate(grid, d.momentum)) < 1e-13);
        CHECK(std::abs(core::integrate(grid, d.energy)) < 1e-13);
    }
}

TEST_CASE("conserved variables invert back to the primitive state") {
    const auto grid = core::Grid1D::make(64, 1.0);
    const core::TransportCoefficients coeffs(0.005, 0.005, 0.0125, 0.004);
    for (auto variant : governing::all_variants) {
        auto state = core::random_smooth_state(grid, gas, 23u);
        if (!governing::has_independent_volume(variant)) {
            state.identify_volume_with_density();
        }
        const auto conserved = governing::to_conserved(state, gas, coeffs, variant);
        const auto back = governing::from_conserved(conserved, gas, coeffs, variant);
        for (int i = 0; i < grid.n_cells; ++i) {
            CHECK(back.a_n[i] == doctest::Approx(state.a_n[i]).epsilon(1e-13));
            CHECK(back.u_m[i] == doctest::Approx(state.u_m[i]).epsilon(1e-13));
            CHECK(back.e_in[i] == doctest::Approx(state.e_in[i]).epsilon(1e-13));
            CHECK(back.v_bar[i] == doctest::Approx(state.v_bar[i]).epsilon(1e-13));
        }
    }
}

TEST_CASE("the full variant's conserved energy subtracts the drift kinetic part") {
    const auto grid = core::Grid1D::make(64, 1.0);
    const core::TransportCoefficients coeffs(0.005, 0.005, 0.0125, 0.0);
    const auto state = core::random_smooth_state(grid, gas, 31u);
    const auto fluxes = constitutive::flux_set(state, gas, coeffs);
    const auto conserved =
        governing::to_conserved(state, gas, coeffs, governing::ModelVariant::volume_full);
    for (int i = 0; i < grid.n_cells; ++i) {
        const double density = gas.molecular_mass * state.a_n[i];
        const double expected =
            density * (0.5 * state.u_m[i] * state.u_m[i] + state.e_in[i] -
                       0.5 * fluxes.jv[i] * fluxes.jv[i]);
        CHECK(conserved.energy[i] == doctest::Approx(expected).epsilon(1e-13));
        CHECK(conserved.density[i] == doctest::Approx(density));
        CHECK(conserved.v_bar[i] == state.v_bar[i]);
    }

    // The other variants carry plain internal energy and no volume field.
    const auto reduced = governing::to_conserved(state, gas, coeffs,
                                                 governing::ModelVariant::bivelocity_reduced);
    CHECK(reduced.v_bar.empty());
    for (int i = 0; i < grid.n_cells; ++i) {
        const double density = gas.molecular_mass * state.a_n[i];
        CHECK(reduced.energy[i] ==
              doctest::Approx(density *
                              (0.5 * state.u_m[i] * state.u_m[i] + state.e_in[i]))
                  .epsilon(1e-13));
    }
}

TEST_CASE("reduction drift measures the distance from the identified manifold") {
    const auto grid = core::Grid1D::make(32, 1.0);
    auto state = core::random_smooth_state(grid, gas, 7u);
    state.identify_volume_with_density();
    CHECK(governing::reduction_drift(state) < 1e-15);
    state.v_bar[10] *= 1.25;
    CHECK(governing::reduction_drift(state) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("discrete right-hand sides converge to the analytic flux divergence") {
    // The manufactured source is the exact continuum divergence, so
    // rhs + source must shrink at second order for every variant.
    const core::TransportCoefficients coeffs(0.005, 0.005, 0.0125, 0.004);
    const analysis::ManufacturedProfile profile;
    for (auto variant : governing::all_variants) {
        double previous = 0.0;
        for (int n : {64, 128}) {
            const auto grid = core::Grid1D::make(n, 1.0);
            const auto state = analysis::manufactured_state(grid, gas, profile, variant);
            const auto source =
                analysis::manufactured_source(grid, gas, coeffs, profile, variant);
            const auto d = governing::rhs(variant, state, gas, coeffs);
            double residual = 0.0;
            for (std::size_t i = 0; i < d.density.size(); ++i) {
                residual = std::max(residual, std::abs(d.density[i] + source.density[i]));
                residual = std::max(residual, std::abs(d.momentum[i] + source.momentum[i]));
                residual = std::max(residual, std::abs(d.energy[i] + source.energy[i]));
            }
            if (governing::has_independent_volume(variant)) {
                for (std::size_t i = 0; i < d.v_bar.size(); ++i) {
                    residual = std::max(residual, std::abs(d.v_bar[i] + source.v_bar[i]));
                }
            }
            if (previous > 0.0) {
                CHECK(previous / residual == doctest::Approx(4.0).epsilon(0.15));
            }
            previous = residual;
        }
    }
}
