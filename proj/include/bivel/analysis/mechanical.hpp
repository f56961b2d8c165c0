/// @file mechanical.hpp
/// @brief Frame-invariance, moment, and center-of-mass checks.

#pragma once

#include <vector>

#include "bivel/core/gas_model.hpp"
#include "bivel/core/transport.hpp"
#include "bivel/governing/variant.hpp"

namespace bivel::analysis {

/// Residual norms across a resolution ladder plus the fitted order.
struct ConvergenceStudy {
  std::vector<double> cells;
  std::vector<double> errors;
  double order = 0.0;
};

/// Compares a boosted run against the lab-frame run after mapping the boost
/// away by an integer-cell shift.  The schemes in the two frames share the
/// continuum limit, so the mismatch shrinks at the discretization order.
struct GalileanStudy {
  ConvergenceStudy mismatch;
  double boost_speed = 0.0;
};

GalileanStudy galilean_covariance_study(const std::vector<int>& cells,
                                        governing::ModelVariant variant,
                                        const core::GasModel& gas,
                                        const core::TransportCoefficients& coeffs);

/// Structural checks that the advanced momentum variable is the mass flux:
/// the conserved momentum must equal density times mass velocity cell by
/// cell, and the periodic flux divergence must telescope to zero.
struct IntegrabilityCheck {
  double max_momentum_identity_error = 0.0;
  double max_conservation_sum = 0.0;
};

IntegrabilityCheck integrability_check(governing::ModelVariant variant,
                                       const core::GasModel& gas,
                                       const core::TransportCoefficients& coeffs);

/// Discrete residual of the moment identity
///   div(x ^ T) = x ^ (div T) + (T_xy - T_yx)
/// on closed-form planar stress fields.  For the symmetric constitutive
/// stress the bracket vanishes, so the residual converges at second order;
/// an antisymmetric control tensor leaves the bracket finite and the
/// residual pinned near 2 max|a|.
struct AngularMomentumStudy {
  ConvergenceStudy symmetric;
  std::vector<double> antisymmetric_residuals;
  double antisymmetric_scale = 0.0;  ///< max |T_xy - T_yx| of the control field
};

AngularMomentumStudy angular_momentum_identity_study(
    const std::vector<int>& resolutions, const core::GasModel& gas,
    const core::TransportCoefficients& coeffs);

/// Pointwise residual of the center-of-mass transport identity
///   d(rho x - t rho u)/dt + div[(rho x - t rho u) u - t (p + Pi_v)] = 0
/// on consecutive solver snapshots of a compact pulse.
struct CenterOfMassStudy {
  ConvergenceStudy residual;
};

CenterOfMassStudy center_of_mass_study(const std::vector<int>& cells,
                                       const core::GasModel& gas,
                                       const core::TransportCoefficients& coeffs);

/// The full mechanical suite at its standard desk-scale settings.
struct MechanicalReport {
  GalileanStudy galilean;
  IntegrabilityCheck integrability;  ///< worst case over all model variants
  AngularMomentumStudy angular_momentum;
  CenterOfMassStudy center_of_mass;
};

MechanicalReport mechanical_checks();

}  // namespace bivel::analysis
