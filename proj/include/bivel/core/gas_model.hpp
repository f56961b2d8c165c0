/// @file gas_model.hpp
/// @brief Monatomic ideal-gas thermodynamic closure.

#pragma once

namespace bivel::core {

/// Thermodynamic constants of a monatomic ideal gas.
///
/// The closure ties pressure, internal energy, and temperature together:
///   p' = (2/3) rho_bar e_in = rho_bar R T',   e_in = c_v T',   c_v = (3/2) R.
/// `molecular_mass` converts between number-based and mass-based densities
/// (rho_bar = M / v_bar = M A_n when volume and number density are identified).
struct GasModel {
    double molecular_mass; ///< M, mass of one molecule (kg)
    double gas_constant;   ///< R, specific gas constant (J/(kg K))
    double c_v;            ///< specific heat at constant volume, (3/2) R

    /// Build the monatomic closure; throws if M or R is non-positive.
    static GasModel monatomic(double molecular_mass, double gas_constant);

    double gamma() const { return (c_v + gas_constant) / c_v; } ///< 5/3 for monatomic
    double c_p() const { return c_v + gas_constant; }

    /// p' = (2/3) rho_bar e_in (equivalently rho_bar R T').
    double pressure(double rho_bar, double e_in) const { return (2.0 / 3.0) * rho_bar * e_in; }

    /// T' = e_in / c_v.
    double temperature(double e_in) const { return e_in / c_v; }

    /// Adiabatic sound speed sqrt(gamma R T').
    double sound_speed(double temperature) const;
};

} // namespace bivel::core
