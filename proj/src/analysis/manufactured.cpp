/// @file manufactured.cpp
/// @brief Steady manufactured profiles and their exact forcing terms.

#include "bivel/analysis/manufactured.hpp"

#include <array>
#include <cmath>

#include "bivel/analysis/manufactured_sources.hpp"
#include "bivel/core/errors.hpp"

namespace bivel::analysis {

namespace {

double wave(double x, double length, double phase) {
  return std::sin(2.0 * M_PI * x / length + phase);
}

/// Packs profile, gas, and transport parameters in the order expected by the
/// generated source functions (see tools/gen_manufactured.py).
std::array<double, 18> pack_parameters(double length, const core::GasModel& gas,
                                       const core::TransportCoefficients& coeffs,
                                       const ManufacturedProfile& p) {
  return {length,
          gas.molecular_mass,
          gas.gas_constant,
          coeffs.mu(),
          coeffs.kappa_m(),
          coeffs.kappa_h(),
          coeffs.kappa_klim(),
          p.rho0,
          p.u0,
          p.T0,
          p.rho_amp,
          p.u_amp,
          p.T_amp,
          p.vb_amp,
          p.rho_phase,
          p.u_phase,
          p.T_phase,
          p.vb_phase};
}

}  // namespace

double ManufacturedProfile::density_at(double x, double length) const {
  return rho0 * (1.0 + rho_amp * wave(x, length, rho_phase));
}

double ManufacturedProfile::velocity_at(double x, double length) const {
  return u0 + u_amp * wave(x, length, u_phase);
}

double ManufacturedProfile::temperature_at(double x, double length) const {
  return T0 * (1.0 + T_amp * wave(x, length, T_phase));
}

double ManufacturedProfile::volume_at(double x, double length,
                                      double molecular_mass) const {
  return (molecular_mass / rho0) * (1.0 + vb_amp * wave(x, length, vb_phase));
}

core::FlowState manufactured_state(const core::Grid1D& grid,
                                   const core::GasModel& gas,
                                   const ManufacturedProfile& profile,
                                   governing::ModelVariant variant) {
  core::FlowState state(grid);
  const double length = grid.length;
  for (int i = 0; i < grid.n_cells; ++i) {
    const double x = grid.center(i);
    state.a_n[i] = profile.density_at(x, length) / gas.molecular_mass;
    state.u_m[i] = profile.velocity_at(x, length);
    state.e_in[i] = gas.c_v * profile.temperature_at(x, length);
    state.v_bar[i] = governing::has_independent_volume(variant)
                         ? profile.volume_at(x, length, gas.molecular_mass)
                         : 1.0 / state.a_n[i];
  }
  return state;
}

governing::StateDerivative manufactured_source(
    const core::Grid1D& grid, const core::GasModel& gas,
    const core::TransportCoefficients& coeffs,
    const ManufacturedProfile& profile, governing::ModelVariant variant) {
  if (coeffs.temperature_exponent() != 0.0) {
    throw core::ValidationError(
        "manufactured_source: requires a constant-viscosity transport model");
  }
  const auto c = pack_parameters(grid.length, gas, coeffs, profile);
  const int n = grid.n_cells;

  governing::StateDerivative source;
  source.density.resize(n);
  source.momentum.resize(n);
  source.energy.resize(n);

  using SourceFn = double (*)(double, const double*);
  SourceFn density_fn = nullptr;
  SourceFn momentum_fn = nullptr;
  SourceFn energy_fn = nullptr;
  SourceFn volume_fn = nullptr;
  switch (variant) {
    case governing::ModelVariant::nsf_baseline:
      density_fn = manufactured_source_nsf_baseline_density;
      momentum_fn = manufactured_source_nsf_baseline_momentum;
      energy_fn = manufactured_source_nsf_baseline_energy;
      break;
    case governing::ModelVariant::bivelocity_reduced:
      density_fn = manufactured_source_bivelocity_reduced_density;
      momentum_fn = manufactured_source_bivelocity_reduced_momentum;
      energy_fn = manufactured_source_bivelocity_reduced_energy;
      break;
    case governing::ModelVariant::klimontovich:
      density_fn = manufactured_source_klimontovich_density;
      momentum_fn = manufactured_source_klimontovich_momentum;
      energy_fn = manufactured_source_klimontovich_energy;
      break;
    case governing::ModelVariant::volume_full:
      density_fn = manufactured_source_volume_full_density;
      momentum_fn = manufactured_source_volume_full_momentum;
      energy_fn = manufactured_source_volume_full_energy;
      volume_fn = manufactured_source_volume_full_v_bar;
      break;
  }

  for (int i = 0; i < n; ++i) {
    const double x = grid.center(i);
    source.density[i] = density_fn(x, c.data());
    source.momentum[i] = momentum_fn(x, c.data());
    source.energy[i] = energy_fn(x, c.data());
  }
  if (volume_fn != nullptr) {
    source.v_bar.resize(n);
    for (int i = 0; i < n; ++i) {
      source.v_bar[i] = volume_fn(grid.center(i), c.data());
    }
  }
  return source;
}

}  // namespace bivel::analysis
