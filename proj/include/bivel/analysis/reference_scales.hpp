/// @file reference_scales.hpp
/// @brief Mean-free-path based reference scales for nondimensional studies.

#pragma once

namespace bivel::analysis {

/// Reference scales built from a mean free path, a macroscopic length, and
/// characteristic density / molecular-speed / temperature values.  All
/// transport coefficients of the dimensionless mode derive from these, so a
/// single Knudsen number controls every diffusive scale at once.
struct ReferenceScales {
  double mean_free_path = 1e-2;    ///< lambda
  double macroscopic_length = 1.0; ///< L
  double molecular_speed = 1.0;    ///< C0, characteristic molecular agitation speed
  double density = 1.0;            ///< rho0
  double temperature = 1.0;        ///< T0
  double molecular_mass = 1.0;     ///< M, so the number-density scale is rho0/M

  /// Builds scales from a Knudsen number: lambda = knudsen * length.
  static ReferenceScales from_knudsen(double knudsen, double length = 1.0,
                                      double speed = 1.0, double density = 1.0,
                                      double temperature = 1.0,
                                      double molecular_mass = 1.0);

  /// Throws core::ValidationError unless every scale is positive.
  void validate() const;

  double knudsen() const { return mean_free_path / macroscopic_length; }
  double mu0() const { return density * molecular_speed * mean_free_path; }
  double kappa_m0() const { return mu0() / density; }
  double t0() const { return mean_free_path / molecular_speed; }
  double kappa_h0() const {
    return mu0() * molecular_speed * molecular_speed / temperature;
  }
  double number_density0() const { return density / molecular_mass; }

  /// Entropy-per-mass scale: the unit volume is rescaled by the cubed mean
  /// free path, giving s0 = lambda^3 / (L * T0 * t0^2).
  double s0() const {
    const double l = mean_free_path;
    return l * l * l / (macroscopic_length * temperature * t0() * t0());
  }

  /// Gas constant implied by the speed and temperature scales, R = C0^2/T0.
  double gas_constant() const {
    return molecular_speed * molecular_speed / temperature;
  }

  /// Scale of the per-volume entropy rate A_n T' Ds/Dt.  Equals
  /// A0 * T0 * s0 / t0 = A0 * C0^3 / L, independent of the mean free path,
  /// so terms divided by it carry their Knudsen-power prefactors exactly.
  double entropy_rate_scale() const {
    const double c = molecular_speed;
    return number_density0() * c * c * c / macroscopic_length;
  }

  /// Scale of the per-mass entropy rate rho Ds/Dt (reduced-model budget):
  /// rho0 * s0 / t0.
  double mass_entropy_rate_scale() const {
    return density * s0() / t0();
  }
};

}  // namespace bivel::analysis
