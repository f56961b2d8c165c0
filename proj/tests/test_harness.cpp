/// @file test_harness.cpp
/// @brief Config grammar, sweep expansion, scenario library, CSV output, and
/// end-to-end scenario execution.

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "bivel/core/errors.hpp"
#include "bivel/harness/config.hpp"
#include "bivel/harness/csv.hpp"
#include "bivel/harness/runner.hpp"
#include "bivel/harness/scenarios.hpp"

using namespace bivel;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& leaf) {
    const fs::path dir = fs::temp_directory_path() / "bivel-tests" / leaf;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_CASE("an empty config parses to the documented defaults") {
    const auto config = harness::parse_config("");
    CHECK(config.scenario.empty());
    CHECK(config.model == governing::ModelVariant::nsf_baseline);
    CHECK(config.grid_cells == 128);
    CHECK(config.grid_length == 1.0);
    CHECK(config.mu == 0.005);
    CHECK(config.kappa_m == 0.005);
    CHECK(config.kappa_h == 0.0125);
    CHECK(config.kappa_klim == 0.0);
    CHECK_FALSE(config.dimensionless);
    CHECK(config.initial.profile == "uniform");
    CHECK(config.integrator.cfl_advective == 0.5);
    CHECK(config.output_dir == "out");
    CHECK(config.emit_plot);
    CHECK(config.sweep.empty());
}

TEST_CASE("comments, blank lines, and whitespace are tolerated") {
    const auto config = harness::parse_config(
        "# leading comment\n"
        "\n"
        "  model   =   volume_full   # trailing comment\n"
        "grid.cells = 64\n");
    CHECK(config.model == governing::ModelVariant::volume_full);
    CHECK(config.grid_cells == 64);
}

TEST_CASE("every problem is reported at once with its line number") {
    const std::string text =
        "model = warp-drive\n"
        "grid.cells = 4\n"
        "transport.mu = -1\n"
        "no.such.key = 1\n";
    try {
        harness::parse_config(text);
        FAIL("expected ConfigError");
    } catch (const core::ConfigError& error) {
        const std::string what = error.what();
        CHECK(what.find("line 1") != std::string::npos);
        CHECK(what.find("line 2") != std::string::npos);
        CHECK(what.find("line 3") != std::string::npos);
        CHECK(what.find("line 4") != std::string::npos);
        CHECK(what.find("warp-drive") != std::string::npos);
        CHECK(what.find("no.such.key") != std::string::npos);
    }
}

TEST_CASE("duplicate keys and malformed lines are config errors") {
    CHECK_THROWS_AS(harness::parse_config("grid.cells = 64\ngrid.cells = 32\n"),
                    core::ConfigError);
    CHECK_THROWS_AS(harness::parse_config("grid.cells\n"), core::ConfigError);
    CHECK_THROWS_AS(harness::parse_config("grid.cells = sixty\n"), core::ConfigError);
}

TEST_CASE("explicit transport keys and dimensionless scales are mutually exclusive") {
    CHECK_THROWS_AS(harness::parse_config("scales.knudsen = 0.01\n"
                                          "transport.mu = 0.01\n"),
                    core::ConfigError);
    CHECK_THROWS_AS(harness::parse_config("scales.length = 2\n"), core::ConfigError);

    // Any scales.* key switches the config into dimensionless mode.
    const auto config = harness::parse_config("scales.knudsen = 0.02\n");
    CHECK(config.dimensionless);
    CHECK(config.scales.knudsen() == doctest::Approx(0.02));
    const auto coeffs = config.transport();
    CHECK(coeffs.mu() == doctest::Approx(config.scales.mu0()));
    CHECK(coeffs.kappa_m() == doctest::Approx(config.scales.kappa_m0()));
    CHECK(coeffs.kappa_h() == doctest::Approx(config.scales.kappa_h0()));
}

TEST_CASE("configs round-trip through their canonical text form") {
    for (const std::string& text :
         {std::string(""),
          std::string("model = klimontovich\n"
                      "transport.kappa_klim = 0.004\n"
                      "grid.cells = 96\n"
                      "initial.profile = gaussian-pulse\n"
                      "initial.amplitude = 0.4\n"
                      "integrator.t_end = 0.25\n"
                      "sweep.1.parameter = grid.cells\n"
                      "sweep.1.values = 32, 64, 128\n"
                      "sweep.2.parameter = transport.mu\n"
                      "sweep.2.values = 0.001, 0.01\n"),
          std::string("scenario = kn-ordering-sweep\n"),
          std::string("scales.knudsen = 0.05\n"
                      "scales.length = 2\n")}) {
        const auto config = harness::parse_config(text);
        const auto round_tripped = harness::parse_config(harness::serialize_config(config));
        CHECK(round_tripped == config);
    }
}

TEST_CASE("the scenario line merges library defaults underneath user keys") {
    const auto config = harness::parse_config("scenario = acoustic-decay\n"
                                              "grid.cells = 48\n");
    CHECK(config.scenario == "acoustic-decay");
    CHECK(config.grid_cells == 48); // user key wins
    CHECK(config.initial.profile == "sinusoidal-acoustic");

    CHECK_THROWS_AS(harness::parse_config("scenario = not-a-scenario\n"), core::ConfigError);
}

TEST_CASE("the scenario library is complete and ordered") {
    const auto& library = harness::scenario_library();
    const std::vector<std::string> expected{
        "acoustic-decay",         "gaussian-pulse",       "klimontovich-entropy-search",
        "kn-ordering-sweep",      "rigid-rotation-eval",  "galilean-pair",
        "center-of-mass",         "model-reduction",      "manufactured-convergence",
        "dispersion-scan"};
    REQUIRE(library.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(library[i].name == expected[i]);
        CHECK_FALSE(library[i].summary.empty());
        CHECK_FALSE(library[i].description.empty());
        // Every defaults block must itself parse.
        CHECK_NOTHROW(harness::parse_config("scenario = " + library[i].name + "\n"));
    }
    CHECK(harness::find_scenario("gaussian-pulse") != nullptr);
    CHECK(harness::find_scenario("gaussian") == nullptr);
}

TEST_CASE("sweep assignments enumerate the cross product with the last axis fastest") {
    const auto config = harness::parse_config("sweep.1.parameter = grid.cells\n"
                                              "sweep.1.values = 32, 64\n"
                                              "sweep.2.parameter = transport.mu\n"
                                              "sweep.2.values = 0.001, 0.01\n");
    const auto assignments = harness::sweep_assignments(config);
    REQUIRE(assignments.size() == 4);
    CHECK(assignments[0][0].second == 32.0);
    CHECK(assignments[0][1].second == 0.001);
    CHECK(assignments[1][0].second == 32.0);
    CHECK(assignments[1][1].second == 0.01);
    CHECK(assignments[2][0].second == 64.0);
    CHECK(assignments[3][1].second == 0.01);

    const auto expanded = harness::expand_sweep(config);
    REQUIRE(expanded.size() == 4);
    CHECK(expanded[0].grid_cells == 32);
    CHECK(expanded[0].mu == 0.001);
    CHECK(expanded[3].grid_cells == 64);
    CHECK(expanded[3].mu == 0.01);
    for (const auto& point : expanded) {
        CHECK(point.sweep.empty());
        CHECK(point.output_dir.find("runs/") != std::string::npos);
    }
    CHECK(expanded[1].output_dir.find("grid.cells=32_transport.mu=0.01") != std::string::npos);

    // A sweep-free config expands to itself.
    const auto plain = harness::parse_config("");
    const auto single = harness::expand_sweep(plain);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == plain);
    CHECK(harness::sweep_assignments(plain).empty());
}

TEST_CASE("sweep axes must be contiguous and nonempty") {
    CHECK_THROWS_AS(harness::parse_config("sweep.2.parameter = grid.cells\n"
                                          "sweep.2.values = 32, 64\n"),
                    core::ConfigError);
    CHECK_THROWS_AS(harness::parse_config("sweep.1.parameter = grid.cells\n"),
                    core::ConfigError);
    CHECK_THROWS_AS(harness::parse_config("sweep.1.parameter = not.a.key\n"
                                          "sweep.1.values = 1, 2\n"),
                    core::ConfigError);
}

TEST_CASE("initial profiles build the advertised states") {
    const auto uniform = harness::parse_config("initial.profile = uniform\n");
    const auto state = uniform.initial_state();
    CHECK(core::max_abs(state.u_m) == 0.0);

    const auto acoustic = harness::parse_config("initial.profile = sinusoidal-acoustic\n"
                                                "initial.amplitude = 0.01\n"
                                                "initial.velocity = 0.2\n");
    const auto wave = acoustic.initial_state();
    const auto gas = acoustic.gas();
    const auto derived = core::derived_quantities(wave, gas);
    // The eigenmode ties the velocity disturbance to the density disturbance
    // through the background sound speed.
    const double rho0 = acoustic.initial.at("density");
    const double u0 = acoustic.initial.at("velocity");
    const double c0 = gas.sound_speed(acoustic.initial.at("temperature"));
    for (int i = 0; i < wave.grid.n_cells; i += 13) {
        const double s = derived.rho_bar[i] / rho0 - 1.0;
        CHECK(wave.u_m[i] == doctest::Approx(u0 + c0 * s).epsilon(1e-12));
    }

    const auto planar = harness::parse_config("initial.profile = rigid-rotation-field\n"
                                              "scenario = rigid-rotation-eval\n");
    CHECK_THROWS_AS(planar.initial_state(), core::ValidationError);

    CHECK_THROWS_AS(harness::parse_config("initial.profile = no-such-profile\n"),
                    core::ConfigError);
    CHECK_THROWS_AS(harness::parse_config("initial.amplitude = 2\n"
                                          "initial.profile = uniform\n"),
                    core::ConfigError); // uniform takes no amplitude
}

TEST_CASE("csv output escapes, checks widths, and ends lines with CRLF") {
    const auto dir = fresh_dir("csv");
    const auto path = dir / "table.csv";
    {
        harness::CsvWriter writer(path, {"name", "value"});
        writer.row(std::vector<std::string>{"plain", "1"});
        writer.row(std::vector<std::string>{"comma,quote\"", "2"});
        writer.row(std::vector<double>{0.1, 1.0 / 3.0});
        CHECK_THROWS(writer.row(std::vector<std::string>{"only-one"}));
        writer.close();
    }
    const std::string text = slurp(path);
    CHECK(text.find("name,value\r\n") == 0);
    CHECK(text.find("\"comma,quote\"\"\"") != std::string::npos);
    CHECK(text.find(harness::format_double(1.0 / 3.0)) != std::string::npos);
    CHECK(text.find("only-one") == std::string::npos);

    // %.17g round-trips every double and strips trailing zeros of exact ones.
    CHECK(std::stod(harness::format_double(0.1)) == 0.1);
    CHECK(std::stod(harness::format_double(1.0 / 3.0)) == 1.0 / 3.0);
    CHECK(harness::format_double(0.5) == "0.5");
    CHECK(harness::format_double(32.0) == "32");
    CHECK(harness::csv_escape("plain") == "plain");
    CHECK(harness::csv_escape("a,b") == "\"a,b\"");
    CHECK(harness::csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("a scenario run writes its bundle and a re-runnable manifest") {
    const auto dir = fresh_dir("model-reduction");
    auto config = harness::parse_config("scenario = model-reduction\n");
    config.output_dir = dir.string();
    const auto outcome = harness::run_scenario(config);

    CHECK(fs::exists(dir / "manifest.txt"));
    CHECK(fs::exists(dir / "report.txt"));
    CHECK(fs::exists(dir / "reduction.csv"));
    CHECK(fs::exists(dir / "plot.py"));
    CHECK(harness::metric(outcome, "mismatch_max") < 1e-12);
    CHECK(harness::metric(outcome, "mismatch_reduced") == 0.0);
    CHECK_THROWS_AS(harness::metric(outcome, "no-such-metric"), core::ValidationError);

    // The manifest reparses to the exact config that produced the run.
    const auto reparsed = harness::parse_config(slurp(dir / "manifest.txt"));
    CHECK(reparsed == config);
}

TEST_CASE("plain runs honor store_every and record conservation metrics") {
    const auto dir = fresh_dir("plain");
    auto config = harness::parse_config("model = volume_full\n"
                                        "initial.profile = gaussian-pulse\n"
                                        "integrator.max_steps = 40\n"
                                        "integrator.store_every = 10\n"
                                        "output.plot = false\n");
    config.output_dir = dir.string();
    const auto outcome = harness::run_scenario(config);
    CHECK(harness::metric(outcome, "steps") == 40.0);
    CHECK(harness::metric(outcome, "mass_drift") < 1e-12);
    CHECK(harness::metric(outcome, "energy_drift") < 1e-12);
    CHECK(fs::exists(dir / "series.csv"));
    CHECK(fs::exists(dir / "snapshots" / "000000.csv"));
    CHECK_FALSE(fs::exists(dir / "plot.py"));

    // Snapshot rows carry the full diagnostic column set.
    const std::string header = slurp(dir / "snapshots" / "000000.csv").substr(0, 300);
    for (const char* column : {"time", "position", "number_density", "mass_density",
                               "pressure", "temperature", "volume_drift_velocity",
                               "stress_total", "heat_flux", "entropic_heat_flux"})
        CHECK(header.find(column) != std::string::npos);
}

TEST_CASE("a run with sweep axes refuses to run as a single scenario and vice versa") {
    auto swept = harness::parse_config("initial.profile = gaussian-pulse\n"
                                       "sweep.1.parameter = grid.cells\n"
                                       "sweep.1.values = 32, 64\n");
    swept.output_dir = fresh_dir("misuse-run").string();
    CHECK_THROWS_AS(harness::run_scenario(swept), core::ConfigError);

    auto plain = harness::parse_config("");
    plain.output_dir = fresh_dir("misuse-sweep").string();
    CHECK_THROWS_AS(harness::run_sweep(plain), core::ConfigError);
}

TEST_CASE("a small sweep produces per-run bundles and a sorted summary") {
    const auto dir = fresh_dir("sweep");
    auto config = harness::parse_config("initial.profile = gaussian-pulse\n"
                                        "integrator.max_steps = 20\n"
                                        "sweep.1.parameter = grid.cells\n"
                                        "sweep.1.values = 64, 32\n");
    config.output_dir = dir.string();
    config.workers = 2;
    const auto outcomes = harness::run_sweep(config);
    REQUIRE(outcomes.size() == 2);
    CHECK(fs::exists(dir / "summary.csv"));
    CHECK(fs::exists(dir / "report.txt"));
    CHECK(fs::exists(dir / "runs" / "grid.cells=32" / "series.csv"));
    CHECK(fs::exists(dir / "runs" / "grid.cells=64" / "series.csv"));

    const std::string summary = slurp(dir / "summary.csv");
    CHECK(summary.find("grid.cells") != std::string::npos);
    // Rows are sorted by the axis value, so 32 appears before 64.
    CHECK(summary.find("\r\n32,") < summary.find("\r\n64,"));
}

TEST_CASE("the check suite passes end to end") {
    bool all_passed = false;
    const std::string report = harness::check_report(&all_passed);
    CHECK(all_passed);
    CHECK(report.find("FAIL") == std::string::npos);
    CHECK(report.find("pass") != std::string::npos);
    for (const char* row : {"galilean-covariance-order", "momentum-is-mass-flux",
                            "angular-momentum-identity", "center-of-mass-order",
                            "dissipation-nonnegative", "indefinite-group-both-signs",
                            "reduced-residual-reported", "model-degeneracy",
                            "conservation-telescoping"})
        CHECK(report.find(row) != std::string::npos);
}
