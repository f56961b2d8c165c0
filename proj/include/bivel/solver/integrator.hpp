/// @file integrator.hpp
/// @brief Explicit RK4 time integration with CFL step control.

#pragma once

#include <optional>
#include <vector>

#include "bivel/core/flow_state.hpp"
#include "bivel/governing/rhs.hpp"

namespace bivel::solver {

struct IntegratorConfig {
    double cfl_advective = 0.5;  ///< fraction of dx / (|u| + c_s)
    double cfl_diffusive = 0.25; ///< fraction of dx^2 / (2 nu_max)
    double fixed_dt = 0.0;       ///< > 0 overrides the CFL choice
    double t_end = 1.0;
    long max_steps = 1000000;    ///< run stops at t_end or max_steps, whichever first
    int store_every = 0;         ///< store a frame every k steps; 0 keeps first/last only
};

/// Stable step: min over cells of the advective and diffusive limits, where the
/// diffusive scale nu_max is the largest of (2 mu' - eta')/rho_bar, kappa_h/(rho_bar c_v),
/// kappa_m, and kappa_klim.
double stable_dt(const core::FlowState& state, const core::GasModel& gas,
                 const core::TransportCoefficients& coeffs, const IntegratorConfig& config);

/// Optional steady per-cell source added to the right-hand side (used by the
/// manufactured-solution scenario).
using SourceTerm = std::optional<governing::StateDerivative>;

/// One classical RK4 step on the conservative variables. The post-step state is
/// validated; failures raise DivergenceError carrying time and step index.
void step_rk4(governing::ModelVariant variant, governing::Conserved& u, double t, double dt,
              const core::GasModel& gas, const core::TransportCoefficients& coeffs,
              const SourceTerm& source = {}, long step_index = 0);

struct Frame {
    double t;
    core::FlowState state;
};

struct Trajectory {
    std::vector<Frame> frames; ///< at least the initial and final states
    long steps = 0;
    double t_final = 0.0;

    const Frame& initial() const { return frames.front(); }
    const Frame& final() const { return frames.back(); }
};

/// Integrate from `initial` until t_end (clamping the last step to land on it
/// exactly) or until max_steps. Deterministic: identical inputs give
/// bit-identical trajectories on one platform.
Trajectory run(governing::ModelVariant variant, const core::FlowState& initial,
               const core::GasModel& gas, const core::TransportCoefficients& coeffs,
               const IntegratorConfig& config, const SourceTerm& source = {});

/// Classical RK4 for a generic ODE system du/dt = f(t, u); used by the
/// integrator-order tests and small fitting utilities.
template <typename Vec, typename Rhs>
Vec rk4_generic(const Vec& u, double t, double dt, Rhs&& f) {
    const Vec k1 = f(t, u);
    Vec tmp = u;
    for (size_t i = 0; i < u.size(); ++i) tmp[i] = u[i] + 0.5 * dt * k1[i];
    const Vec k2 = f(t + 0.5 * dt, tmp);
    for (size_t i = 0; i < u.size(); ++i) tmp[i] = u[i] + 0.5 * dt * k2[i];
    const Vec k3 = f(t + 0.5 * dt, tmp);
    for (size_t i = 0; i < u.size(); ++i) tmp[i] = u[i] + dt * k3[i];
    const Vec k4 = f(t + dt, tmp);
    Vec out = u;
    for (size_t i = 0; i < u.size(); ++i) {
        out[i] = u[i] + (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return out;
}

} // namespace bivel::solver
