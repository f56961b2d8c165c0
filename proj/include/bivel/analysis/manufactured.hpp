/// @file manufactured.hpp
/// @brief Steady manufactured profiles and their exact forcing terms.

#pragma once

#include "bivel/core/flow_state.hpp"
#include "bivel/core/gas_model.hpp"
#include "bivel/core/grid.hpp"
#include "bivel/core/transport.hpp"
#include "bivel/governing/rhs.hpp"
#include "bivel/governing/variant.hpp"

namespace bivel::analysis {

/// Sinusoidal profile parameters for the manufactured-solution study.
/// Density, velocity and temperature are single-mode sinusoids on the
/// periodic domain; the full volume model carries an independent specific
/// volume sinusoid so the volume equation is exercised too.
struct ManufacturedProfile {
  double rho0 = 1.0;
  double u0 = 0.0;
  double T0 = 1.0;
  double rho_amp = 0.1;
  double u_amp = 0.1;
  double T_amp = 0.1;
  double vb_amp = 0.05;
  double rho_phase = 0.0;
  double u_phase = 0.7;
  double T_phase = 1.9;
  double vb_phase = 3.1;

  double density_at(double x, double length) const;
  double velocity_at(double x, double length) const;
  double temperature_at(double x, double length) const;
  /// Specific volume, centered on molecular_mass / rho0.
  double volume_at(double x, double length, double molecular_mass) const;
};

/// Evaluates the manufactured profiles at cell centers.  Variants without an
/// independent volume field identify the specific volume with the density.
core::FlowState manufactured_state(const core::Grid1D& grid,
                                   const core::GasModel& gas,
                                   const ManufacturedProfile& profile,
                                   governing::ModelVariant variant);

/// Exact spatial flux divergence of each governing equation on the
/// manufactured profiles, expressed in conserved variables.  Adding this as
/// a source term makes the manufactured state a steady solution, so the
/// discrete drift measures the truncation error directly.  Requires a
/// constant-viscosity transport model (temperature exponent zero).
governing::StateDerivative manufactured_source(
    const core::Grid1D& grid, const core::GasModel& gas,
    const core::TransportCoefficients& coeffs,
    const ManufacturedProfile& profile, governing::ModelVariant variant);

}  // namespace bivel::analysis
