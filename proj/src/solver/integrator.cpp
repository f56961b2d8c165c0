#include "bivel/solver/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bivel/core/errors.hpp"

namespace bivel::solver {

using governing::Conserved;
using governing::ModelVariant;
using governing::StateDerivative;

double stable_dt(const core::FlowState& state, const core::GasModel& gas,
                 const core::TransportCoefficients& coeffs, const IntegratorConfig& config) {
    const double dx = state.grid.dx();
    double dt = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < state.a_n.size(); ++i) {
        const double T = gas.temperature(state.e_in[i]);
        const double rho = gas.molecular_mass / state.v_bar[i];
        const double speed = std::abs(state.u_m[i]) + gas.sound_speed(T);
        const double nu = std::max({coeffs.longitudinal_at(T) / rho,
                                    coeffs.kappa_h() / (rho * gas.c_v), coeffs.kappa_m(),
                                    coeffs.kappa_klim()});
        const double advective = config.cfl_advective * dx / speed;
        dt = std::min(dt, advective);
        if (nu > 0.0) {
            dt = std::min(dt, config.cfl_diffusive * dx * dx / (2.0 * nu));
        }
    }
    return dt;
}

namespace {

StateDerivative eval_rhs(ModelVariant variant, const Conserved& u, const core::GasModel& gas,
                         const core::TransportCoefficients& coeffs, const SourceTerm& source) {
    core::FlowState state = governing::from_conserved(u, gas, coeffs, variant);
    StateDerivative d = governing::rhs(variant, state, gas, coeffs);
    if (source) {
        for (size_t i = 0; i < d.density.size(); ++i) {
            d.density[i] += source->density[i];
            d.momentum[i] += source->momentum[i];
            d.energy[i] += source->energy[i];
        }
        if (!d.v_bar.empty() && !source->v_bar.empty()) {
            for (size_t i = 0; i < d.v_bar.size(); ++i) {
                d.v_bar[i] += source->v_bar[i];
            }
        }
    }
    return d;
}

void axpy(Conserved& out, const Conserved& u, double a, const StateDerivative& d) {
    for (size_t i = 0; i < u.density.size(); ++i) {
        out.density[i] = u.density[i] + a * d.density[i];
        out.momentum[i] = u.momentum[i] + a * d.momentum[i];
        out.energy[i] = u.energy[i] + a * d.energy[i];
    }
    if (!u.v_bar.empty()) {
        for (size_t i = 0; i < u.v_bar.size(); ++i) {
            out.v_bar[i] = u.v_bar[i] + a * d.v_bar[i];
        }
    }
}

} // namespace

void step_rk4(ModelVariant variant, Conserved& u, double t, double dt,
              const core::GasModel& gas, const core::TransportCoefficients& coeffs,
              const SourceTerm& source, long step_index) {
    Conserved stage = u;
    const StateDerivative k1 = eval_rhs(variant, u, gas, coeffs, source);
    axpy(stage, u, 0.5 * dt, k1);
    const StateDerivative k2 = eval_rhs(variant, stage, gas, coeffs, source);
    axpy(stage, u, 0.5 * dt, k2);
    const StateDerivative k3 = eval_rhs(variant, stage, gas, coeffs, source);
    axpy(stage, u, dt, k3);
    const StateDerivative k4 = eval_rhs(variant, stage, gas, coeffs, source);

    const double w = dt / 6.0;
    for (size_t i = 0; i < u.density.size(); ++i) {
        u.density[i] += w * (k1.density[i] + 2.0 * k2.density[i] + 2.0 * k3.density[i] +
                             k4.density[i]);
        u.momentum[i] += w * (k1.momentum[i] + 2.0 * k2.momentum[i] + 2.0 * k3.momentum[i] +
                              k4.momentum[i]);
        u.energy[i] +=
            w * (k1.energy[i] + 2.0 * k2.energy[i] + 2.0 * k3.energy[i] + k4.energy[i]);
    }
    if (!u.v_bar.empty()) {
        for (size_t i = 0; i < u.v_bar.size(); ++i) {
            u.v_bar[i] +=
                w * (k1.v_bar[i] + 2.0 * k2.v_bar[i] + 2.0 * k3.v_bar[i] + k4.v_bar[i]);
        }
    }

    const core::ValidationReport report =
        core::validate(governing::from_conserved(u, gas, coeffs, variant));
    if (!report) {
        std::ostringstream msg;
        msg << "integration diverged at t = " << t + dt << " (step " << step_index
            << "): " << report.joined();
        throw core::DivergenceError(msg.str(), t + dt, step_index);
    }
}

Trajectory run(ModelVariant variant, const core::FlowState& initial, const core::GasModel& gas,
               const core::TransportCoefficients& coeffs, const IntegratorConfig& config,
               const SourceTerm& source) {
    const core::ValidationReport report = core::validate(initial);
    if (!report) {
        throw core::ValidationError("run: invalid initial state: " + report.joined());
    }

    Conserved u = governing::to_conserved(initial, gas, coeffs, variant);
    Trajectory traj;
    traj.frames.push_back(Frame{0.0, initial});

    double t = 0.0;
    long step = 0;
    while (t < config.t_end && step < config.max_steps) {
        const core::FlowState current = governing::from_conserved(u, gas, coeffs, variant);
        double dt = config.fixed_dt > 0.0 ? config.fixed_dt
                                          : stable_dt(current, gas, coeffs, config);
        if (t + dt > config.t_end) {
            dt = config.t_end - t; // land exactly on t_end
        }
        step_rk4(variant, u, t, dt, gas, coeffs, source, step);
        t += dt;
        ++step;
        if (config.store_every > 0 && step % config.store_every == 0 && t < config.t_end) {
            traj.frames.push_back(Frame{t, governing::from_conserved(u, gas, coeffs, variant)});
        }
    }

    traj.frames.push_back(Frame{t, governing::from_conserved(u, gas, coeffs, variant)});
    traj.steps = step;
    traj.t_final = t;
    return traj;
}

} // namespace bivel::solver
