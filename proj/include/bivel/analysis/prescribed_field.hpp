/// @file prescribed_field.hpp
/// @brief Pointwise constitutive evaluation on closed-form planar fields.

#pragma once

#include <array>
#include <vector>

#include "bivel/analysis/reference_scales.hpp"
#include "bivel/constitutive/fluxes.hpp"
#include "bivel/core/gas_model.hpp"
#include "bivel/core/transport.hpp"

namespace bivel::analysis {

/// A closed-form planar (x, y) field of density, temperature, and velocity.
/// Derivative callbacks default to fourth-order central differencing of the
/// value callbacks; analytic specs may override them exactly.
class PlanarFieldSpec {
 public:
  virtual ~PlanarFieldSpec() = default;

  virtual double density(double x, double y) const = 0;
  virtual double temperature(double x, double y) const = 0;
  virtual std::array<double, 2> velocity(double x, double y) const = 0;

  /// d rho / d(x, y)
  virtual std::array<double, 2> density_gradient(double x, double y) const;
  /// d2 rho / d(xx, xy, yy)
  virtual std::array<double, 3> density_hessian(double x, double y) const;
  /// d T / d(x, y)
  virtual std::array<double, 2> temperature_gradient(double x, double y) const;
  /// d u_i / d x_j, row-major (du_x/dx, du_x/dy, du_y/dx, du_y/dy)
  virtual std::array<double, 4> velocity_gradient(double x, double y) const;

  /// Step used by the differencing fallbacks.
  virtual double derivative_step() const { return 1e-3; }
};

/// Isothermal rigidly rotating equilibrium: solid-body velocity
/// U = omega (-y, x), constant temperature, and the centrifugally balanced
/// density rho(r) = rho0 exp(omega^2 r^2 / (2 R T0)) — the unique steady
/// isothermal solution of the inviscid momentum balance.  All derivatives
/// are analytic.
class RigidRotationField : public PlanarFieldSpec {
 public:
  RigidRotationField(double omega, double rho0, double temperature,
                     double gas_constant);

  double density(double x, double y) const override;
  double temperature(double x, double y) const override;
  std::array<double, 2> velocity(double x, double y) const override;
  std::array<double, 2> density_gradient(double x, double y) const override;
  std::array<double, 3> density_hessian(double x, double y) const override;
  std::array<double, 2> temperature_gradient(double x, double y) const override;
  std::array<double, 4> velocity_gradient(double x, double y) const override;

  double omega() const { return omega_; }

 private:
  double omega_;
  double rho0_;
  double temperature_;
  double inv_rt_;  ///< omega^2 / (R T0)
};

/// Pointwise constitutive terms sampled on a rectangle.
struct PlanarEvaluation {
  int nx = 0;
  int ny = 0;
  double max_pi_um = 0.0;          ///< largest |component| of the mass-velocity stress
  double max_q_s = 0.0;            ///< largest |component| of the entropic heat flux
  double max_asymmetry = 0.0;      ///< largest |Pi_v_xy - Pi_v_yx| (symmetry check)
  /// -(A_n/rho) Pi_Jv : grad(j_v) per sample, row-major by y then x.
  std::vector<double> drift_production;
  double drift_production_integral = 0.0;  ///< midpoint quadrature
  double drift_production_min = 0.0;       ///< pointwise minimum
};

/// Samples the field on an nx-by-ny midpoint grid over
/// [x0, x1] x [y0, y1] and evaluates the stress split, the entropic heat
/// flux, and the drift-drift entropy production.
PlanarEvaluation evaluate_planar_field(const PlanarFieldSpec& field, double x0,
                                       double x1, double y0, double y1, int nx,
                                       int ny, const core::GasModel& gas,
                                       const core::TransportCoefficients& coeffs);

/// Mean-free-path sweep of the rigid-rotation configuration: confirms that
/// the mass-velocity stress and the entropic heat flux vanish, that the
/// drift-drift production is positive, and fits its Knudsen slope
/// (expected 3).
struct RotationStudy {
  std::vector<double> knudsens;
  std::vector<double> productions;  ///< nondimensional production integrals
  double slope = 0.0;
  double max_pi_um_scaled = 0.0;  ///< max |Pi_Um| / (mu * omega) over the sweep
  double max_q_s_scaled = 0.0;    ///< max |q_s| / (kappa_h0 T0 / (rho0 L))
  double production_min = 0.0;    ///< smallest pointwise production seen
};

RotationStudy rigid_rotation_study(const std::vector<double>& knudsens,
                                   double omega, int samples,
                                   const ReferenceScales& base);

}  // namespace bivel::analysis
