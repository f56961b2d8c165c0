#include "bivel/governing/rhs.hpp"

#include <cmath>

#include "bivel/constitutive/fluxes.hpp"
#include "bivel/core/errors.hpp"

namespace bivel::governing {

using constitutive::flux_set;
using constitutive::FluxSet;
using core::divergence;
using core::FlowState;
using core::gradient;

namespace {

core::TransportCoefficients without_volume_diffusion(const core::TransportCoefficients& c) {
    return core::TransportCoefficients(c.mu(), 0.0, c.kappa_h(), c.kappa_klim(),
                                       c.temperature_exponent(), c.reference_temperature());
}

/// Shared mass-based assembly.
///
/// With kappa_m > 0 this is the reduced bivelocity set: the stress responds to
/// the volume velocity and works against it in the energy flux, while the mass
/// flux stays rho u_m. With kappa_m == 0 the same arithmetic collapses to the
/// NSF baseline bit for bit. `kappa_klim > 0` appends the Laplacian diffusion
/// of mass, momentum, and total energy; the branch is skipped entirely at 0 so
/// the degeneracy to NSF is exact.
StateDerivative mass_based_rhs(const FlowState& state, const core::GasModel& gas,
                               const core::TransportCoefficients& coeffs, double kappa_klim) {
    const size_t n = state.a_n.size();
    const FluxSet fs = flux_set(state, gas, coeffs);

    Field rho(n), pressure(n), total_energy(n);
    for (size_t i = 0; i < n; ++i) {
        rho[i] = gas.molecular_mass / state.v_bar[i];
        pressure[i] = gas.pressure(rho[i], state.e_in[i]);
        total_energy[i] = rho[i] * (0.5 * state.u_m[i] * state.u_m[i] + state.e_in[i]);
    }

    Field f_mass(n), f_mom(n), f_energy(n);
    for (size_t i = 0; i < n; ++i) {
        f_mass[i] = rho[i] * state.u_m[i];
        f_mom[i] = rho[i] * state.u_m[i] * state.u_m[i] + pressure[i] + fs.pi_v[i];
        // Pressure and stress work against the volume velocity; the diffusive
        // part of the heat flux cancels against it, leaving rho q_s = -kappa_h dT/dx.
        f_energy[i] = total_energy[i] * state.u_m[i] + (pressure[i] + fs.pi_v[i]) * fs.u_v[i] +
                      rho[i] * fs.q_s[i];
    }

    if (kappa_klim > 0.0) {
        Field grad_rho = gradient(state.grid, rho);
        Field momentum(n);
        for (size_t i = 0; i < n; ++i) {
            momentum[i] = rho[i] * state.u_m[i];
        }
        Field grad_mom = gradient(state.grid, momentum);
        Field grad_energy = gradient(state.grid, total_energy);
        for (size_t i = 0; i < n; ++i) {
            f_mass[i] -= kappa_klim * grad_rho[i];
            f_mom[i] -= kappa_klim * grad_mom[i];
            f_energy[i] -= kappa_klim * grad_energy[i];
        }
    }

    Field d_mass = divergence(state.grid, f_mass);
    Field d_mom = divergence(state.grid, f_mom);
    Field d_energy = divergence(state.grid, f_energy);

    StateDerivative d;
    d.density.resize(n);
    d.momentum.resize(n);
    d.energy.resize(n);
    for (size_t i = 0; i < n; ++i) {
        d.density[i] = -d_mass[i];
        d.momentum[i] = -d_mom[i];
        d.energy[i] = -d_energy[i];
    }
    return d;
}

} // namespace

StateDerivative rhs_nsf_baseline(const FlowState& state, const core::GasModel& gas,
                                 const core::TransportCoefficients& coeffs) {
    return mass_based_rhs(state, gas, without_volume_diffusion(coeffs), 0.0);
}

StateDerivative rhs_bivelocity_reduced(const FlowState& state, const core::GasModel& gas,
                                       const core::TransportCoefficients& coeffs) {
    return mass_based_rhs(state, gas, coeffs, 0.0);
}

StateDerivative rhs_klimontovich(const FlowState& state, const core::GasModel& gas,
                                 const core::TransportCoefficients& coeffs) {
    return mass_based_rhs(state, gas, without_volume_diffusion(coeffs), coeffs.kappa_klim());
}

StateDerivative rhs_volume_full(const FlowState& state, const core::GasModel& gas,
                                const core::TransportCoefficients& coeffs) {
    const size_t n = state.a_n.size();
    const double M = gas.molecular_mass;
    const FluxSet fs = flux_set(state, gas, coeffs);
    const constitutive::VolumeProduction vp = constitutive::volume_production(state, gas, coeffs);

    Field rho_a(n), rho_bar(n), pressure(n), energy(n);
    for (size_t i = 0; i < n; ++i) {
        rho_a[i] = M * state.a_n[i];
        rho_bar[i] = M / state.v_bar[i];
        pressure[i] = gas.pressure(rho_bar[i], state.e_in[i]);
        // Advected internal energy carries the diffusive kinetic correction.
        const double frak_e = state.e_in[i] - 0.5 * fs.jv[i] * fs.jv[i];
        energy[i] = rho_a[i] * (0.5 * state.u_m[i] * state.u_m[i] + frak_e);
    }

    Field f_mass(n), f_mom(n), f_energy(n), f_volume(n);
    for (size_t i = 0; i < n; ++i) {
        const double ratio = rho_a[i] / rho_bar[i];
        const double jv2 = fs.jv[i] * fs.jv[i];
        f_mass[i] = rho_a[i] * state.u_m[i];
        f_mom[i] = rho_a[i] * state.u_m[i] * state.u_m[i] +
                   ratio * (pressure[i] + fs.pi_v[i]) - rho_a[i] * jv2;
        f_energy[i] = energy[i] * state.u_m[i] +
                      (ratio * (pressure[i] + fs.pi_v[i]) - rho_a[i] * jv2) * fs.u_v[i] +
                      rho_a[i] * fs.q_s[i];
        f_volume[i] = state.a_n[i] * state.v_bar[i] * fs.jv[i];
    }

    Field d_mass = divergence(state.grid, f_mass);
    Field d_mom = divergence(state.grid, f_mom);
    Field d_energy = divergence(state.grid, f_energy);
    Field d_volume = divergence(state.grid, f_volume);
    Field grad_vbar = gradient(state.grid, state.v_bar);

    StateDerivative d;
    d.density.resize(n);
    d.momentum.resize(n);
    d.energy.resize(n);
    d.v_bar.resize(n);
    for (size_t i = 0; i < n; ++i) {
        d.density[i] = -d_mass[i];
        d.momentum[i] = -d_mom[i];
        d.energy[i] = -d_energy[i];
        d.v_bar[i] = -state.u_m[i] * grad_vbar[i] - d_volume[i] / state.a_n[i] + vp.w[i];
    }
    return d;
}

StateDerivative rhs(ModelVariant variant, const FlowState& state, const core::GasModel& gas,
                    const core::TransportCoefficients& coeffs) {
    switch (variant) {
    case ModelVariant::nsf_baseline:
        return rhs_nsf_baseline(state, gas, coeffs);
    case ModelVariant::bivelocity_reduced:
        return rhs_bivelocity_reduced(state, gas, coeffs);
    case ModelVariant::volume_full:
        return rhs_volume_full(state, gas, coeffs);
    case ModelVariant::klimontovich:
        return rhs_klimontovich(state, gas, coeffs);
    }
    throw core::ValidationError("rhs: unknown model variant");
}

Conserved to_conserved(const FlowState& state, const core::GasModel& gas,
                       const core::TransportCoefficients& coeffs, ModelVariant variant) {
    const size_t n = state.a_n.size();
    const double M = gas.molecular_mass;
    Conserved u(state.grid);
    u.density.resize(n);
    u.momentum.resize(n);
    u.energy.resize(n);

    Field jv;
    if (has_independent_volume(variant)) {
        jv = constitutive::volume_flux(state, gas, coeffs);
        u.v_bar = state.v_bar;
    }
    for (size_t i = 0; i < n; ++i) {
        u.density[i] = M * state.a_n[i];
        u.momentum[i] = u.density[i] * state.u_m[i];
        double e = state.e_in[i];
        if (has_independent_volume(variant)) {
            e -= 0.5 * jv[i] * jv[i];
        }
        u.energy[i] = u.density[i] * (0.5 * state.u_m[i] * state.u_m[i] + e);
    }
    return u;
}

FlowState from_conserved(const Conserved& conserved, const core::GasModel& gas,
                         const core::TransportCoefficients& coeffs, ModelVariant variant) {
    const size_t n = conserved.density.size();
    const double M = gas.molecular_mass;
    FlowState state(conserved.grid);
    for (size_t i = 0; i < n; ++i) {
        state.a_n[i] = conserved.density[i] / M;
        state.u_m[i] = conserved.momentum[i] / conserved.density[i];
        state.e_in[i] =
            conserved.energy[i] / conserved.density[i] - 0.5 * state.u_m[i] * state.u_m[i];
    }
    if (has_independent_volume(variant)) {
        state.v_bar = conserved.v_bar;
        // Restore e_in = frak_e + jv^2/2; jv is reconstructed from v_bar.
        Field jv = constitutive::volume_flux(state, gas, coeffs);
        for (size_t i = 0; i < n; ++i) {
            state.e_in[i] += 0.5 * jv[i] * jv[i];
        }
    } else {
        state.identify_volume_with_density();
    }
    return state;
}

double reduction_drift(const FlowState& state) {
    double drift = 0.0;
    for (size_t i = 0; i < state.a_n.size(); ++i) {
        drift = std::max(drift, std::abs(state.v_bar[i] * state.a_n[i] - 1.0));
    }
    return drift;
}

} // namespace bivel::governing
