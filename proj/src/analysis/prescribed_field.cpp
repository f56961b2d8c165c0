/// @file prescribed_field.cpp
/// @brief Pointwise constitutive evaluation on closed-form planar fields.

#include "bivel/analysis/prescribed_field.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "bivel/analysis/fit.hpp"
#include "bivel/core/errors.hpp"

namespace bivel::analysis {

namespace {

/// Fourth-order central first derivative of a scalar callback.
double diff4(const std::function<double(double)>& f, double x, double h) {
  return (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) /
         (12.0 * h);
}

/// Fourth-order central second derivative of a scalar callback.
double diff4_second(const std::function<double(double)>& f, double x, double h) {
  return (-f(x + 2.0 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) -
          f(x - 2.0 * h)) /
         (12.0 * h * h);
}

constitutive::Mat3 embed_gradient(const std::array<double, 4>& g) {
  constitutive::Mat3 m{};
  m(0, 0) = g[0];
  m(0, 1) = g[1];
  m(1, 0) = g[2];
  m(1, 1) = g[3];
  return m;
}

}  // namespace

std::array<double, 2> PlanarFieldSpec::density_gradient(double x, double y) const {
  const double h = derivative_step();
  return {diff4([&](double s) { return density(s, y); }, x, h),
          diff4([&](double s) { return density(x, s); }, y, h)};
}

std::array<double, 3> PlanarFieldSpec::density_hessian(double x, double y) const {
  const double h = derivative_step();
  const double dxx = diff4_second([&](double s) { return density(s, y); }, x, h);
  const double dyy = diff4_second([&](double s) { return density(x, s); }, y, h);
  // Mixed derivative: difference the x-gradient in y.
  const double dxy = diff4(
      [&](double s) {
        return diff4([&](double r) { return density(r, s); }, x, h);
      },
      y, h);
  return {dxx, dxy, dyy};
}

std::array<double, 2> PlanarFieldSpec::temperature_gradient(double x,
                                                            double y) const {
  const double h = derivative_step();
  return {diff4([&](double s) { return temperature(s, y); }, x, h),
          diff4([&](double s) { return temperature(x, s); }, y, h)};
}

std::array<double, 4> PlanarFieldSpec::velocity_gradient(double x,
                                                         double y) const {
  const double h = derivative_step();
  const double ux_x =
      diff4([&](double s) { return velocity(s, y)[0]; }, x, h);
  const double ux_y =
      diff4([&](double s) { return velocity(x, s)[0]; }, y, h);
  const double uy_x =
      diff4([&](double s) { return velocity(s, y)[1]; }, x, h);
  const double uy_y =
      diff4([&](double s) { return velocity(x, s)[1]; }, y, h);
  return {ux_x, ux_y, uy_x, uy_y};
}

RigidRotationField::RigidRotationField(double omega, double rho0,
                                       double temperature, double gas_constant)
    : omega_(omega), rho0_(rho0), temperature_(temperature),
      inv_rt_(omega * omega / (gas_constant * temperature)) {
  if (!(rho0 > 0.0) || !(temperature > 0.0) || !(gas_constant > 0.0)) {
    throw core::ValidationError(
        "rigid rotation field: density, temperature, and gas constant must be "
        "positive");
  }
}

double RigidRotationField::density(double x, double y) const {
  return rho0_ * std::exp(0.5 * inv_rt_ * (x * x + y * y));
}

double RigidRotationField::temperature(double, double) const {
  return temperature_;
}

std::array<double, 2> RigidRotationField::velocity(double x, double y) const {
  return {-omega_ * y, omega_ * x};
}

std::array<double, 2> RigidRotationField::density_gradient(double x,
                                                           double y) const {
  const double rho = density(x, y);
  return {rho * inv_rt_ * x, rho * inv_rt_ * y};
}

std::array<double, 3> RigidRotationField::density_hessian(double x,
                                                          double y) const {
  const double rho = density(x, y);
  const double gx = inv_rt_ * x;
  const double gy = inv_rt_ * y;
  return {rho * (inv_rt_ + gx * gx), rho * gx * gy, rho * (inv_rt_ + gy * gy)};
}

std::array<double, 2> RigidRotationField::temperature_gradient(double,
                                                               double) const {
  return {0.0, 0.0};
}

std::array<double, 4> RigidRotationField::velocity_gradient(double,
                                                            double) const {
  return {0.0, -omega_, omega_, 0.0};
}

PlanarEvaluation evaluate_planar_field(const PlanarFieldSpec& field, double x0,
                                       double x1, double y0, double y1, int nx,
                                       int ny, const core::GasModel& gas,
                                       const core::TransportCoefficients& coeffs) {
  if (nx < 1 || ny < 1) {
    throw core::ValidationError("evaluate_planar_field: needs nx, ny >= 1");
  }
  const double dx = (x1 - x0) / nx;
  const double dy = (y1 - y0) / ny;

  PlanarEvaluation out;
  out.nx = nx;
  out.ny = ny;
  out.drift_production.resize(static_cast<std::size_t>(nx) * ny);
  out.drift_production_min = std::numeric_limits<double>::infinity();

  const double kappa_m = coeffs.kappa_m();
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const double x = x0 + (ix + 0.5) * dx;
      const double y = y0 + (iy + 0.5) * dy;

      const double rho = field.density(x, y);
      const double t = field.temperature(x, y);
      const auto grad_rho = field.density_gradient(x, y);
      const auto hess_rho = field.density_hessian(x, y);
      const auto grad_t = field.temperature_gradient(x, y);
      const auto grad_u = field.velocity_gradient(x, y);

      const double mu = coeffs.mu_at(t);
      const double eta = coeffs.eta_at(t);

      const auto pi_um = constitutive::newtonian_stress(embed_gradient(grad_u),
                                                        mu, eta);
      // grad j_v with j_v = (kappa_m/rho) grad rho:
      //   d_i j_j = kappa_m (d_i d_j rho / rho - d_i rho d_j rho / rho^2)
      std::array<double, 4> grad_jv{};
      const std::array<double, 4> hess = {hess_rho[0], hess_rho[1],
                                          hess_rho[1], hess_rho[2]};
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          const double gi = i == 0 ? grad_rho[0] : grad_rho[1];
          const double gj = j == 0 ? grad_rho[0] : grad_rho[1];
          grad_jv[static_cast<std::size_t>(2 * i + j)] =
              kappa_m * (hess[static_cast<std::size_t>(2 * i + j)] / rho -
                         gi * gj / (rho * rho));
        }
      }
      const auto grad_jv_mat = embed_gradient(grad_jv);
      const auto pi_jv = constitutive::newtonian_stress(grad_jv_mat, mu, eta);

      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          out.max_pi_um = std::max(out.max_pi_um, std::abs(pi_um(i, j)));
        }
      }
      const double qs_x = -coeffs.kappa_h() / rho * grad_t[0];
      const double qs_y = -coeffs.kappa_h() / rho * grad_t[1];
      out.max_q_s = std::max({out.max_q_s, std::abs(qs_x), std::abs(qs_y)});

      constitutive::Mat3 pi_v{};
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          pi_v(i, j) = pi_um(i, j) + pi_jv(i, j);
        }
      }
      out.max_asymmetry =
          std::max(out.max_asymmetry, constitutive::max_asymmetry(pi_v));

      // -(A_n/rho) Pi_Jv : grad j_v with A_n = rho/M.
      const double production =
          -constitutive::contract(pi_jv, grad_jv_mat) / gas.molecular_mass;
      out.drift_production[static_cast<std::size_t>(iy) * nx + ix] = production;
      out.drift_production_integral += production * dx * dy;
      out.drift_production_min = std::min(out.drift_production_min, production);
    }
  }
  return out;
}

RotationStudy rigid_rotation_study(const std::vector<double>& knudsens,
                                   double omega, int samples,
                                   const ReferenceScales& base) {
  if (knudsens.size() < 4) {
    throw core::ValidationError(
        "rigid_rotation_study: need at least 4 sweep values");
  }
  const core::GasModel gas =
      core::GasModel::monatomic(base.molecular_mass, base.gas_constant());
  const double half = 0.5 * base.macroscopic_length;
  const RigidRotationField field(omega, base.density, base.temperature,
                                 base.gas_constant());

  RotationStudy study;
  study.knudsens = knudsens;
  std::sort(study.knudsens.begin(), study.knudsens.end());
  study.production_min = std::numeric_limits<double>::infinity();
  for (double kn : study.knudsens) {
    ReferenceScales scales = base;
    scales.mean_free_path = kn * base.macroscopic_length;
    scales.validate();
    const core::TransportCoefficients coeffs(scales.mu0(), scales.kappa_m0(),
                                             scales.kappa_h0());
    const auto eval = evaluate_planar_field(field, -half, half, -half, half,
                                            samples, samples, gas, coeffs);
    study.max_pi_um_scaled = std::max(
        study.max_pi_um_scaled, eval.max_pi_um / (coeffs.mu() * omega));
    const double q_scale = scales.kappa_h0() * scales.temperature /
                           (scales.density * scales.macroscopic_length);
    study.max_q_s_scaled =
        std::max(study.max_q_s_scaled, eval.max_q_s / q_scale);
    study.production_min =
        std::min(study.production_min, eval.drift_production_min);
    study.productions.push_back(eval.drift_production_integral /
                                scales.entropy_rate_scale());
  }
  study.slope = fit_loglog(study.knudsens, study.productions).slope;
  return study;
}

}  // namespace bivel::analysis
