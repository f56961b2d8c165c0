/// @file fluxes.hpp
/// @brief Constitutive closures: volume flux, stress split, heat fluxes, volume production.

#pragma once

#include "bivel/core/flow_state.hpp"
#include "bivel/core/gas_model.hpp"
#include "bivel/core/transport.hpp"

namespace bivel::constitutive {

using core::Field;

/// All constitutive fields evaluated on one state (1-D, cell-centered).
///
/// `jv` is the diffusive volume velocity (1/v_bar) J_v = (kappa_m/rho_bar) grad rho_bar,
/// so the volume velocity is u_v = u_m + jv. The viscous stress responds to the
/// volume velocity and splits linearly into the mass-velocity part `pi_um` and the
/// diffusive part `pi_jv`; `pi_v = pi_um + pi_jv` holds exactly by construction.
/// `q_prime` is the heat flux in per-mass units and `q_s` the entropic heat flux;
/// the diffusive contribution cancels in `q_s`, leaving -(kappa_h/rho_bar) grad T'.
struct FluxSet {
    Field jv;
    Field u_v;
    Field pi_um;   ///< -(2 mu' - eta') d(u_m)/dx, longitudinal component
    Field pi_jv;   ///< -(2 mu' - eta') d(jv)/dx
    Field pi_v;    ///< pi_um + pi_jv
    Field q_prime; ///< -(kappa_h/rho_bar) dT'/dx - (3/2)(p'/rho_bar) jv
    Field q_s;     ///< -(kappa_h/rho_bar) dT'/dx
};

/// Diffusive volume velocity via the density form (kappa_m/rho_bar) grad rho_bar.
Field volume_flux(const core::FlowState& state, const core::GasModel& gas,
                  const core::TransportCoefficients& coeffs);

/// Equivalent form -(kappa_m/v_bar) grad v_bar; agrees with `volume_flux` to
/// discretization error (exactly in the continuum since rho_bar = M / v_bar).
Field volume_flux_via_vbar(const core::FlowState& state, const core::GasModel& gas,
                           const core::TransportCoefficients& coeffs);

/// Volume velocity u_m + jv.
Field volume_velocity(const core::FlowState& state, const core::GasModel& gas,
                      const core::TransportCoefficients& coeffs);

/// Evaluate every constitutive field at once (shared intermediate gradients).
FluxSet flux_set(const core::FlowState& state, const core::GasModel& gas,
                 const core::TransportCoefficients& coeffs);

/// The six groups of the volume-production balance and the production W it defines.
///
/// W is obtained by solving the balance for the production: W = M/(A_n p') times
/// the sum of the six groups below. Division by p' is guarded; any cell with
/// p' <= pressure_floor raises SingularClosureError naming the cell.
struct VolumeProduction {
    Field w;                 ///< volume production W (m^3/s)
    Field stress_transport;  ///< -d/dx[(A_n/rho_bar) pi_v jv]
    Field drift_dilation;    ///< A_n jv^2 d(u_m)/dx
    Field pi_jv_grad_jv;     ///< (A_n/rho_bar) pi_jv d(jv)/dx
    Field pi_um_grad_jv;     ///< (A_n/rho_bar) pi_um d(jv)/dx
    Field pressure_dilation; ///< (p'/M) d/dx[A_n v_bar jv]
    Field pressure_drift;    ///< d/dx[(-A_n p'/rho_bar + A_n jv^2) jv]
};

VolumeProduction volume_production(const core::FlowState& state, const core::GasModel& gas,
                                   const core::TransportCoefficients& coeffs,
                                   double pressure_floor = 0.0);

// ---------------------------------------------------------------------------
// Small dense 3x3 tensor helpers for full-tensor invariants and 2-D evaluation.
// ---------------------------------------------------------------------------

struct Mat3 {
    double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    double& operator()(int i, int j) { return m[i][j]; }
    double operator()(int i, int j) const { return m[i][j]; }
};

/// Newtonian stress -mu (g + g^T) + eta tr(g) I of a velocity gradient g.
Mat3 newtonian_stress(const Mat3& grad_u, double mu, double eta);

double trace(const Mat3& a);
double contract(const Mat3& a, const Mat3& b); ///< A : B = sum_ij A_ij B_ij
double max_asymmetry(const Mat3& a);           ///< max_ij |A_ij - A_ji|

} // namespace bivel::constitutive
