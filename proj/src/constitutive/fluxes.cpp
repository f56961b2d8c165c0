#include "bivel/constitutive/fluxes.hpp"

#include <cmath>
#include <sstream>

#include "bivel/core/errors.hpp"

namespace bivel::constitutive {

using core::divergence;
using core::gradient;

Field volume_flux(const core::FlowState& state, const core::GasModel& gas,
                  const core::TransportCoefficients& coeffs) {
    const size_t n = state.a_n.size();
    Field rho_bar(n);
    for (size_t i = 0; i < n; ++i) {
        rho_bar[i] = gas.molecular_mass / state.v_bar[i];
    }
    Field grad_rho = gradient(state.grid, rho_bar);
    Field jv(n);
    for (size_t i = 0; i < n; ++i) {
        jv[i] = coeffs.kappa_m() * grad_rho[i] / rho_bar[i];
    }
    return jv;
}

Field volume_flux_via_vbar(const core::FlowState& state, const core::GasModel&,
                           const core::TransportCoefficients& coeffs) {
    Field grad_vbar = gradient(state.grid, state.v_bar);
    Field jv(state.v_bar.size());
    for (size_t i = 0; i < jv.size(); ++i) {
        jv[i] = -coeffs.kappa_m() * grad_vbar[i] / state.v_bar[i];
    }
    return jv;
}

Field volume_velocity(const core::FlowState& state, const core::GasModel& gas,
                      const core::TransportCoefficients& coeffs) {
    Field jv = volume_flux(state, gas, coeffs);
    for (size_t i = 0; i < jv.size(); ++i) {
        jv[i] += state.u_m[i];
    }
    return jv;
}

FluxSet flux_set(const core::FlowState& state, const core::GasModel& gas,
                 const core::TransportCoefficients& coeffs) {
    const size_t n = state.a_n.size();
    FluxSet fs;
    fs.jv = volume_flux(state, gas, coeffs);
    fs.u_v.resize(n);
    for (size_t i = 0; i < n; ++i) {
        fs.u_v[i] = state.u_m[i] + fs.jv[i];
    }

    Field grad_um = gradient(state.grid, state.u_m);
    Field grad_jv = gradient(state.grid, fs.jv);
    fs.pi_um.resize(n);
    fs.pi_jv.resize(n);
    fs.pi_v.resize(n);
    Field temperature(n);
    for (size_t i = 0; i < n; ++i) {
        temperature[i] = gas.temperature(state.e_in[i]);
        const double a_long = coeffs.longitudinal_at(temperature[i]);
        fs.pi_um[i] = -a_long * grad_um[i];
        fs.pi_jv[i] = -a_long * grad_jv[i];
        fs.pi_v[i] = fs.pi_um[i] + fs.pi_jv[i]; // split is exact by construction
    }

    Field grad_T = gradient(state.grid, temperature);
    fs.q_prime.resize(n);
    fs.q_s.resize(n);
    for (size_t i = 0; i < n; ++i) {
        const double rho_bar = gas.molecular_mass / state.v_bar[i];
        const double p = gas.pressure(rho_bar, state.e_in[i]);
        fs.q_s[i] = -(coeffs.kappa_h() / rho_bar) * grad_T[i];
        fs.q_prime[i] = fs.q_s[i] - 1.5 * (p / rho_bar) * fs.jv[i];
    }
    return fs;
}

VolumeProduction volume_production(const core::FlowState& state, const core::GasModel& gas,
                                   const core::TransportCoefficients& coeffs,
                                   double pressure_floor) {
    const size_t n = state.a_n.size();
    const double M = gas.molecular_mass;
    FluxSet fs = flux_set(state, gas, coeffs);

    Field rho_bar(n), pressure(n);
    for (size_t i = 0; i < n; ++i) {
        rho_bar[i] = M / state.v_bar[i];
        pressure[i] = gas.pressure(rho_bar[i], state.e_in[i]);
        if (!(pressure[i] > pressure_floor)) {
            std::ostringstream msg;
            msg << "volume_production: pressure " << pressure[i] << " at cell " << i
                << " is at or below the floor " << pressure_floor;
            throw core::SingularClosureError(msg.str());
        }
    }

    Field grad_um = gradient(state.grid, state.u_m);
    Field grad_jv = gradient(state.grid, fs.jv);

    VolumeProduction vp;
    vp.stress_transport.resize(n);
    vp.drift_dilation.resize(n);
    vp.pi_jv_grad_jv.resize(n);
    vp.pi_um_grad_jv.resize(n);
    vp.pressure_dilation.resize(n);
    vp.pressure_drift.resize(n);
    vp.w.resize(n);

    // Divergence-form groups are built as cell-centered flux arrays first.
    Field stress_flux(n), volume_flux_arr(n), drift_flux(n);
    for (size_t i = 0; i < n; ++i) {
        const double a_over_rho = state.a_n[i] / rho_bar[i];
        stress_flux[i] = a_over_rho * fs.pi_v[i] * fs.jv[i];
        volume_flux_arr[i] = state.a_n[i] * state.v_bar[i] * fs.jv[i];
        drift_flux[i] =
            (-state.a_n[i] * pressure[i] / rho_bar[i] + state.a_n[i] * fs.jv[i] * fs.jv[i]) *
            fs.jv[i];
    }
    Field d_stress = divergence(state.grid, stress_flux);
    Field d_volume = divergence(state.grid, volume_flux_arr);
    Field d_drift = divergence(state.grid, drift_flux);

    for (size_t i = 0; i < n; ++i) {
        const double a_over_rho = state.a_n[i] / rho_bar[i];
        vp.stress_transport[i] = -d_stress[i];
        vp.drift_dilation[i] = state.a_n[i] * fs.jv[i] * fs.jv[i] * grad_um[i];
        vp.pi_jv_grad_jv[i] = a_over_rho * fs.pi_jv[i] * grad_jv[i];
        vp.pi_um_grad_jv[i] = a_over_rho * fs.pi_um[i] * grad_jv[i];
        vp.pressure_dilation[i] = (pressure[i] / M) * d_volume[i];
        vp.pressure_drift[i] = d_drift[i];
        vp.w[i] = (M / (state.a_n[i] * pressure[i])) *
                  (vp.stress_transport[i] + vp.drift_dilation[i] + vp.pi_jv_grad_jv[i] +
                   vp.pi_um_grad_jv[i] + vp.pressure_dilation[i] + vp.pressure_drift[i]);
    }
    return vp;
}

Mat3 newtonian_stress(const Mat3& grad_u, double mu, double eta) {
    Mat3 pi;
    const double div_u = trace(grad_u);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            pi(i, j) = -mu * (grad_u(i, j) + grad_u(j, i));
        }
        pi(i, i) += eta * div_u;
    }
    return pi;
}

double trace(const Mat3& a) { return a(0, 0) + a(1, 1) + a(2, 2); }

double contract(const Mat3& a, const Mat3& b) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            s += a(i, j) * b(i, j);
        }
    }
    return s;
}

double max_asymmetry(const Mat3& a) {
    double m = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            m = std::max(m, std::abs(a(i, j) - a(j, i)));
        }
    }
    return m;
}

} // namespace bivel::constitutive
