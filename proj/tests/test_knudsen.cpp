/// @file test_knudsen.cpp
/// @brief Reference scales and Knudsen-power ordering of the budget groups.

#include <doctest.h>

#include <cmath>

#include "bivel/analysis/knudsen.hpp"
#include "bivel/core/errors.hpp"

using namespace bivel;

TEST_CASE("reference scales derive consistently from a Knudsen number") {
    const auto scales = analysis::ReferenceScales::from_knudsen(0.02, 2.0, 3.0, 1.5, 2.5, 0.5);
    scales.validate();
    CHECK(scales.knudsen() == doctest::Approx(0.02));
    CHECK(scales.mean_free_path == doctest::Approx(0.04));
    CHECK(scales.mu0() == doctest::Approx(1.5 * 3.0 * 0.04));
    CHECK(scales.kappa_m0() == doctest::Approx(scales.mu0() / 1.5));
    CHECK(scales.kappa_h0() == doctest::Approx(scales.mu0() * 9.0 / 2.5));
    CHECK(scales.t0() == doctest::Approx(0.04 / 3.0));
    CHECK(scales.number_density0() == doctest::Approx(3.0));
    CHECK(scales.gas_constant() == doctest::Approx(9.0 / 2.5));
    CHECK(scales.entropy_rate_scale() == doctest::Approx(3.0 * 27.0 / 2.0));
    CHECK(scales.mass_entropy_rate_scale() ==
          doctest::Approx(scales.density * scales.s0() / scales.t0()));

    // The per-volume entropy-rate scale is independent of the mean free path.
    const auto other = analysis::ReferenceScales::from_knudsen(0.1, 2.0, 3.0, 1.5, 2.5, 0.5);
    CHECK(other.entropy_rate_scale() == doctest::Approx(scales.entropy_rate_scale()));
}

TEST_CASE("reference-scale validation rejects non-positive entries") {
    analysis::ReferenceScales scales;
    scales.mean_free_path = 0.0;
    CHECK_THROWS_AS(scales.validate(), core::ValidationError);
    scales.mean_free_path = 1e-2;
    scales.temperature = -1.0;
    CHECK_THROWS_AS(scales.validate(), core::ValidationError);
    CHECK_THROWS_AS(analysis::ReferenceScales::from_knudsen(0.0), core::ValidationError);
}

TEST_CASE("a single ordering point reports positive magnitudes for all five groups") {
    const analysis::StarredProfile profile;
    const auto point = analysis::knudsen_ordering_point(
        1e-2, profile, 128, analysis::ReferenceScales{});
    CHECK(point.knudsen == doctest::Approx(1e-2));
    REQUIRE(point.magnitudes.size() == 5);
    for (const auto& [name, value] : point.magnitudes) {
        INFO(name);
        CHECK(value > 0.0);
    }
}

TEST_CASE("the ordering sweep recovers the expected Knudsen powers") {
    const analysis::StarredProfile profile;
    const std::vector<double> knudsens{1e-3, 3e-3, 1e-2, 3e-2, 1e-1};
    const auto study =
        analysis::knudsen_ordering_study(knudsens, profile, 128, analysis::ReferenceScales{});
    REQUIRE(study.points.size() == 5);
    for (std::size_t i = 1; i < study.points.size(); ++i)
        CHECK(study.points[i].knudsen > study.points[i - 1].knudsen);

    CHECK(std::abs(study.slope_of("heat_conduction") - 1.0) <= 0.1);
    CHECK(std::abs(study.slope_of("shear_mass") - 1.0) <= 0.1);
    CHECK(std::abs(study.slope_of("cross_mass_drift") - 2.0) <= 0.1);
    CHECK(std::abs(study.slope_of("cross_drift_mass") - 2.0) <= 0.1);
    CHECK(std::abs(study.slope_of("drift_drift") - 3.0) <= 0.15);

    for (const auto& slope : study.slopes)
        CHECK(std::abs(slope.slope - slope.expected_order) <= 0.15);
    CHECK_THROWS_AS(study.slope_of("absent"), core::ValidationError);
}

TEST_CASE("sweeps with fewer than four Knudsen values are rejected") {
    const analysis::StarredProfile profile;
    CHECK_THROWS_AS(analysis::knudsen_ordering_study({1e-3, 1e-2, 1e-1}, profile, 64,
                                                     analysis::ReferenceScales{}),
                    core::ValidationError);
    CHECK_THROWS_AS(analysis::reduced_residual_study({1e-3, 1e-2, 1e-1}, profile, 64,
                                                     analysis::ReferenceScales{}),
                    core::ValidationError);
}

TEST_CASE("the reduced residual scales quadratically on generic fields, cubically without mass shear") {
    const std::vector<double> knudsens{1e-3, 3e-3, 1e-2, 3e-2};

    analysis::StarredProfile generic;
    const auto quadratic = analysis::reduced_residual_study(knudsens, generic, 128,
                                                            analysis::ReferenceScales{});
    REQUIRE(quadratic.slopes.size() == 1);
    CHECK(std::abs(quadratic.slopes[0].slope - 2.0) <= 0.2);

    analysis::StarredProfile still;
    still.u_amp = 0.0;
    const auto cubic = analysis::reduced_residual_study(knudsens, still, 128,
                                                        analysis::ReferenceScales{});
    CHECK(std::abs(cubic.slopes[0].slope - 3.0) <= 0.2);
}
