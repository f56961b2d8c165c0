/// @file scenarios.cpp
/// @brief The built-in scenario library: names, documentation, defaults.

#include "bivel/harness/scenarios.hpp"

namespace bivel::harness {

const std::vector<Scenario>& scenario_library() {
    static const std::vector<Scenario> library = {
        {"acoustic-decay",
         "damped sound wave: measured decay rate vs. the linearized prediction",
         "Integrates a small-amplitude right-moving sound wave on a periodic\n"
         "domain, fits the exponential decay of the velocity RMS over time, and\n"
         "compares it against the decay rate of the acoustic mode of the\n"
         "linearized equations at the same wavenumber. Outputs: series.csv with\n"
         "conserved integrals and wave amplitude, snapshots, and a report with\n"
         "the measured and predicted rates. The initial condition is the ideal\n"
         "acoustic eigenmode, so the fitted rate carries a small contamination\n"
         "from the thermal mode; the report states the relative gap.",
         "model = nsf_baseline\n"
         "transport.mu = 0.005\n"
         "transport.kappa_m = 0\n"
         "transport.kappa_h = 0.0125\n"
         "grid.cells = 128\n"
         "grid.length = 1.0\n"
         "initial.profile = sinusoidal-acoustic\n"
         "initial.amplitude = 0.001\n"
         "initial.wavenumber = 1\n"
         "integrator.t_end = 2.0\n"
         "integrator.store_every = 200\n"
         "diagnostics = conserved\n"
         "output.dir = out/acoustic-decay\n"},

        {"gaussian-pulse",
         "density pulse relaxation with strict conservation accounting",
         "Relaxes a Gaussian density pulse on a periodic domain and tracks the\n"
         "drift of total mass, momentum, and energy. With conservative fluxes\n"
         "and periodic wrapping the cell sums telescope, so the drift should\n"
         "sit at accumulated round-off (momentum drift is reported relative to\n"
         "total mass times the sound speed because it starts at zero). Works\n"
         "for every model variant via the `model` key.",
         "model = nsf_baseline\n"
         "transport.mu = 0.005\n"
         "transport.kappa_m = 0.005\n"
         "transport.kappa_h = 0.0125\n"
         "transport.kappa_klim = 0.004\n"
         "grid.cells = 256\n"
         "grid.length = 1.0\n"
         "initial.profile = gaussian-pulse\n"
         "initial.amplitude = 0.3\n"
         "initial.sigma = 0.06\n"
         "initial.center = 0.5\n"
         "integrator.t_end = 0.25\n"
         "integrator.store_every = 500\n"
         "diagnostics = conserved\n"
         "output.dir = out/gaussian-pulse\n"},

        {"klimontovich-entropy-search",
         "grid search for indefinite-sign entropy production in the Laplacian-diffusion model",
         "Evaluates the Klimontovich entropy balance on a family of sinusoidal\n"
         "states (density and temperature amplitudes and their relative phase)\n"
         "and records the pointwise range of the indefinite cross group and the\n"
         "total production integral of each state. The cross group attains both\n"
         "signs, and for a large density amplitude anti-aligned with a small\n"
         "temperature amplitude the total integrated production goes negative —\n"
         "the structural defect this model family is known for. Outputs:\n"
         "search.csv with one row per candidate state and a report naming the\n"
         "most negative total found (or stating that none was found). The\n"
         "report also states the reduced-model indefinite residual on a\n"
         "generic smooth state, which is nonzero whenever kappa_m > 0.",
         "model = klimontovich\n"
         "transport.mu = 0.005\n"
         "transport.kappa_m = 0.005\n"
         "transport.kappa_h = 0.0125\n"
         "transport.kappa_klim = 0.004\n"
         "grid.cells = 256\n"
         "grid.length = 1.0\n"
         "initial.profile = uniform\n"
         "integrator.t_end = 1.0\n"
         "diagnostics = klimontovich-budget\n"
         "output.dir = out/klimontovich-entropy-search\n"},

        {"kn-ordering-sweep",
         "mean-free-path sweep checking the Knudsen-power ladder of the budget groups",
         "Holds the dimensionless initial fields fixed and sweeps the mean free\n"
         "path (the Knudsen number), so each entropy-budget group's integrated\n"
         "magnitude follows a pure power of Kn. The five groups split into\n"
         "heat conduction and mass shear (first order), the two stress cross\n"
         "groups (second order), and the drift-drift group (third order); the\n"
         "sweep fits log-log slopes and checks the integer exponents {1, 2, 3}.\n"
         "Outputs: summary.csv with per-Kn group magnitudes and a report with\n"
         "the fitted slopes {1, 1, 2, 2, 3}.",
         "model = volume_full\n"
         "scales.knudsen = 0.01\n"
         "grid.cells = 256\n"
         "grid.length = 1.0\n"
         "initial.profile = manufactured\n"
         "initial.density_amplitude = 0.2\n"
         "initial.velocity_amplitude = 0.2\n"
         "initial.temperature_amplitude = 0.2\n"
         "integrator.t_end = 1.0\n"
         "diagnostics = volume-budget\n"
         "sweep.1.parameter = scales.knudsen\n"
         "sweep.1.values = 0.001, 0.003, 0.01, 0.03, 0.1\n"
         "output.dir = out/kn-ordering-sweep\n"},

        {"rigid-rotation-eval",
         "rotating isothermal equilibrium: shear stress and heat flux vanish, drift production persists",
         "Samples the rigidly rotating isothermal equilibrium (solid-body\n"
         "velocity, centrifugally balanced density) on a planar grid and\n"
         "evaluates the constitutive fields pointwise: the strain-rate stress\n"
         "and the entropic heat flux vanish identically, while the drift part\n"
         "of the stress keeps producing entropy through the density gradient.\n"
         "A mean-free-path sweep fits the Knudsen slope of that production\n"
         "(expected 3). Outputs: summary.csv with per-Kn production integrals\n"
         "and a report with the slope and the vanishing-norm checks.",
         "model = volume_full\n"
         "scales.knudsen = 0.01\n"
         "grid.cells = 48\n"
         "grid.length = 1.0\n"
         "initial.profile = rigid-rotation-field\n"
         "initial.omega = 1.0\n"
         "initial.density = 1.0\n"
         "initial.temperature = 1.0\n"
         "integrator.t_end = 1.0\n"
         "diagnostics = volume-budget\n"
         "sweep.1.parameter = scales.knudsen\n"
         "sweep.1.values = 0.001, 0.003, 0.01, 0.03, 0.1\n"
         "output.dir = out/rigid-rotation-eval\n"},

        {"galilean-pair",
         "same flow in a lab frame and a boosted frame; mismatch must vanish with resolution",
         "Runs the same smooth initial state twice: once as given and once\n"
         "boosted to a moving frame, with a shared time step. After mapping the\n"
         "boosted result back (shift by the frame displacement, subtract the\n"
         "boost), the two solutions differ only through discretization, so the\n"
         "max-norm mismatch must converge at the scheme's order (2). The cell\n"
         "counts swept must keep the displacement an integer number of cells.\n"
         "Outputs: summary.csv with per-resolution mismatches and the fitted\n"
         "order in the report.",
         "model = bivelocity_reduced\n"
         "transport.mu = 0.005\n"
         "transport.kappa_m = 0.005\n"
         "transport.kappa_h = 0.0125\n"
         "grid.cells = 64\n"
         "grid.length = 1.0\n"
         "initial.profile = manufactured\n"
         "integrator.t_end = 0.125\n"
         "diagnostics = conserved\n"
         "sweep.1.parameter = grid.cells\n"
         "sweep.1.values = 64, 128, 256\n"
         "output.dir = out/galilean-pair\n"},

        {"center-of-mass",
         "discrete residual of the center-of-mass conservation law",
         "Advances a Gaussian pulse and forms the quantity B = rho x - t rho u,\n"
         "whose continuum balance closes against the flux B u - t (p + Pi_v).\n"
         "The scenario evaluates the discrete residual of that balance from\n"
         "snapshot pairs and fits its convergence order across resolutions\n"
         "(expected 2). Outputs: summary.csv with per-resolution residuals and\n"
         "the fitted order in the report.",
         "model = bivelocity_reduced\n"
         "transport.mu = 0.005\n"
         "transport.kappa_m = 0.005\n"
         "transport.kappa_h = 0.0125\n"
         "grid.cells = 128\n"
         "grid.length = 1.0\n"
         "initial.profile = gaussian-pulse\n"
         "integrator.t_end = 0.05\n"
         "diagnostics = conserved\n"
         "sweep.1.parameter = grid.cells\n"
         "sweep.1.values = 128, 256, 512\n"
         "output.dir = out/center-of-mass\n"},

        {"model-reduction",
         "coefficient-zeroing degeneracy: every variant collapses onto the classical baseline",
         "Builds random smooth states and compares the full right-hand sides of\n"
         "the model variants after zeroing the coefficients that distinguish\n"
         "them: the reduced bivelocity model with kappa_m = 0, the Klimontovich\n"
         "model with kappa_klim = 0, and the full volume model with kappa_m = 0\n"
         "and the volume field identified with the density. All three must\n"
         "agree with the classical baseline elementwise to round-off. Outputs:\n"
         "report with the worst relative mismatch per pair.",
         "model = nsf_baseline\n"
         "transport.mu = 0.005\n"
         "transport.kappa_m = 0.005\n"
         "transport.kappa_h = 0.0125\n"
         "transport.kappa_klim = 0.004\n"
         "grid.cells = 128\n"
         "grid.length = 1.0\n"
         "initial.profile = uniform\n"
         "integrator.t_end = 1.0\n"
         "diagnostics = conserved\n"
         "output.dir = out/model-reduction\n"},

        {"manufactured-convergence",
         "manufactured-solution order checks for every variant plus entropy-budget closure",
         "Forces each variant with the analytic source that makes a smooth\n"
         "sinusoidal state an exact steady solution, then measures the\n"
         "deviation after integration across a resolution sweep; second-order\n"
         "convergence is expected for every variant. The same sweep closes the\n"
         "volume-model entropy budget on unforced snapshot pairs: the entropy\n"
         "rate built from the state's material derivatives must match the\n"
         "summed budget terms at order 2. Outputs: summary.csv with per-variant\n"
         "errors per resolution, closure residuals, and fitted orders in the\n"
         "report.",
         "model = volume_full\n"
         "transport.mu = 0.005\n"
         "transport.kappa_m = 0.005\n"
         "transport.kappa_h = 0.0125\n"
         "transport.kappa_klim = 0.004\n"
         "grid.cells = 64\n"
         "grid.length = 1.0\n"
         "initial.profile = manufactured\n"
         "integrator.t_end = 0.01\n"
         "diagnostics = volume-budget\n"
         "sweep.1.parameter = grid.cells\n"
         "sweep.1.values = 64, 128, 256\n"
         "output.dir = out/manufactured-convergence\n"},

        {"dispersion-scan",
         "plane-wave phase speed and attenuation curves for all variants",
         "Solves the linearized plane-wave problem of every variant over a\n"
         "logarithmic frequency grid: all spatial wavenumber roots, the forward\n"
         "decaying acoustic branch, its phase speed and attenuation, and the\n"
         "classical viscous-conductive absorption estimate for comparison.\n"
         "Checks recorded in the report: the classical baseline's phase speed\n"
         "approaches the adiabatic sound speed at low frequency, zeroing\n"
         "kappa_m collapses the reduced model onto the baseline root-for-root,\n"
         "and a positive kappa_m shifts the attenuation. Outputs: branches.csv\n"
         "with one row per (variant, frequency).",
         "model = nsf_baseline\n"
         "transport.mu = 0.005\n"
         "transport.kappa_m = 0.008\n"
         "transport.kappa_h = 0.0125\n"
         "transport.kappa_klim = 0.004\n"
         "grid.cells = 128\n"
         "grid.length = 1.0\n"
         "initial.profile = uniform\n"
         "integrator.t_end = 1.0\n"
         "diagnostics = conserved\n"
         "output.dir = out/dispersion-scan\n"},
    };
    return library;
}

const Scenario* find_scenario(const std::string& name) {
    for (const auto& scenario : scenario_library()) {
        if (scenario.name == name) return &scenario;
    }
    return nullptr;
}

} // namespace bivel::harness
