/// @file rhs.hpp
/// @brief Conservative state vectors and right-hand sides for every model variant.

#pragma once

#include "bivel/core/flow_state.hpp"
#include "bivel/core/gas_model.hpp"
#include "bivel/core/transport.hpp"
#include "bivel/governing/variant.hpp"

namespace bivel::governing {

using core::Field;

/// Variables advanced in time.
///
/// `density` is the mass-scaled number density M A_n (equal to rho_bar except in
/// the full volume variant, where rho_bar = M / v_bar is independent), `momentum`
/// is density * u_m, and `energy` is density * (u_m^2/2 + e), where e is the
/// specific internal energy less the diffusive kinetic correction jv^2/2 in the
/// full variant and plain e_in otherwise. `v_bar` is carried only by volume_full.
struct Conserved {
    core::Grid1D grid;
    Field density;
    Field momentum;
    Field energy;
    Field v_bar; ///< empty except for volume_full

    explicit Conserved(const core::Grid1D& grid) : grid(grid) {}
};

/// Time derivative of Conserved, same shapes.
struct StateDerivative {
    Field density;
    Field momentum;
    Field energy;
    Field v_bar; ///< empty except for volume_full
};

Conserved to_conserved(const core::FlowState& state, const core::GasModel& gas,
                       const core::TransportCoefficients& coeffs, ModelVariant variant);

core::FlowState from_conserved(const Conserved& conserved, const core::GasModel& gas,
                               const core::TransportCoefficients& coeffs, ModelVariant variant);

/// Right-hand sides. Each returns the time derivative of the conservative
/// variables; the first three equations are exact flux divergences, so their
/// cell sums telescope to round-off on periodic grids.
StateDerivative rhs_nsf_baseline(const core::FlowState& state, const core::GasModel& gas,
                                 const core::TransportCoefficients& coeffs);
StateDerivative rhs_bivelocity_reduced(const core::FlowState& state, const core::GasModel& gas,
                                       const core::TransportCoefficients& coeffs);
StateDerivative rhs_volume_full(const core::FlowState& state, const core::GasModel& gas,
                                const core::TransportCoefficients& coeffs);
StateDerivative rhs_klimontovich(const core::FlowState& state, const core::GasModel& gas,
                                 const core::TransportCoefficients& coeffs);

StateDerivative rhs(ModelVariant variant, const core::FlowState& state,
                    const core::GasModel& gas, const core::TransportCoefficients& coeffs);

/// Drift of the reduced-model identification: max_i |v_bar_i a_n_i - 1|.
double reduction_drift(const core::FlowState& state);

} // namespace bivel::governing
