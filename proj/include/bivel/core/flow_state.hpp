/// @file flow_state.hpp
/// @brief Structure-of-arrays flow state and its derived thermodynamic fields.

#pragma once

#include <string>
#include <vector>

#include "bivel/core/gas_model.hpp"
#include "bivel/core/grid.hpp"

namespace bivel::core {

/// Primitive state of the fluid, one entry per cell.
///
/// `a_n` is the reduced one-particle probability density (number density),
/// `v_bar` the mean free volume per particle, `u_m` the mass velocity, and
/// `e_in` the specific internal energy. In the reduced and classical variants
/// the identification M a_n = rho_bar = M / v_bar holds by construction and
/// `v_bar` is kept equal to 1 / a_n; the full volume variant evolves `v_bar`
/// independently.
struct FlowState {
    Grid1D grid;
    Field a_n;   ///< reduced probability density (1/m^3)
    Field v_bar; ///< mean free volume per particle (m^3)
    Field u_m;   ///< mass velocity (m/s)
    Field e_in;  ///< specific internal energy (J/kg)

    /// All-fields-allocated constructor; values must be filled by the caller.
    explicit FlowState(const Grid1D& grid);

    int n_cells() const { return grid.n_cells; }

    /// Set v_bar = 1 / a_n (the reduced-model identification).
    void identify_volume_with_density();
};

/// Fields derived from the primitive state through the gas closure.
struct DerivedFields {
    Field rho_bar;     ///< physical mass density M / v_bar (kg/m^3)
    Field pressure;    ///< p' = (2/3) rho_bar e_in (Pa)
    Field temperature; ///< T' = e_in / c_v (K)
    Field sound_speed; ///< sqrt(gamma R T') (m/s)
};

DerivedFields derived_quantities(const FlowState& state, const GasModel& gas);

/// Outcome of a positivity validation pass.
struct ValidationReport {
    bool ok = true;
    std::vector<std::string> messages; ///< one per offending field, naming the first bad cell

    explicit operator bool() const { return ok; }
    std::string joined() const;
};

/// Check a_n > 0, v_bar > 0, e_in > 0 and that every field is finite.
/// Each failing field contributes one message naming the first offending cell.
ValidationReport validate(const FlowState& state);

/// Smooth low-mode random state for property tests and degeneracy audits.
/// Deterministic in `seed`; fields are bounded away from zero.
FlowState random_smooth_state(const Grid1D& grid, const GasModel& gas, unsigned long seed);

} // namespace bivel::core
