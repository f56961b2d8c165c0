/// @file mechanical.cpp
/// @brief Frame-invariance, moment, and center-of-mass checks.

#include "bivel/analysis/mechanical.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "bivel/analysis/fit.hpp"
#include "bivel/analysis/manufactured.hpp"
#include "bivel/analysis/prescribed_field.hpp"
#include "bivel/constitutive/fluxes.hpp"
#include "bivel/core/errors.hpp"
#include "bivel/core/flow_state.hpp"
#include "bivel/core/grid.hpp"
#include "bivel/governing/rhs.hpp"
#include "bivel/solver/integrator.hpp"

namespace bivel::analysis {

namespace {

ManufacturedProfile smooth_wave_profile() {
  ManufacturedProfile p;
  p.rho_amp = 0.2;
  p.u_amp = 0.1;
  p.T_amp = 0.1;
  p.rho_phase = 0.0;
  p.u_phase = 0.5;
  p.T_phase = 1.2;
  return p;
}

double field_mismatch(const core::Field& a, const core::Field& b, int shift) {
  const int n = static_cast<int>(a.size());
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    worst = std::max(worst, std::abs(a[i] - b[(i + shift) % n]));
  }
  return worst;
}

/// Smooth non-periodic planar field for the moment-identity study.
class WavyPlanarField final : public PlanarFieldSpec {
 public:
  double density(double x, double y) const override {
    return 1.0 + 0.3 * std::sin(2.1 * x + 0.3) * std::cos(1.7 * y + 0.8);
  }
  double temperature(double x, double y) const override {
    return 1.0 + 0.2 * std::cos(1.3 * x) * std::sin(1.9 * y + 0.4);
  }
  std::array<double, 2> velocity(double x, double y) const override {
    return {0.3 * std::sin(1.5 * x + 0.2) * std::cos(1.1 * y),
            0.25 * std::cos(0.9 * x) * std::sin(1.3 * y + 0.6)};
  }
};

struct TensorGrid {
  int nodes = 0;
  double h = 0.0;
  std::vector<double> xx, xy, yx, yy;

  double& at(std::vector<double>& f, int i, int j) const {
    return f[static_cast<std::size_t>(j) * nodes + i];
  }
  double get(const std::vector<double>& f, int i, int j) const {
    return f[static_cast<std::size_t>(j) * nodes + i];
  }
};

/// Maximum interior residual of div(x ^ T) - x ^ (div T), dropping the
/// bracket term, with second-order central differences on the node grid.
double moment_identity_residual(const TensorGrid& g) {
  const int n = g.nodes;
  const double inv2h = 1.0 / (2.0 * g.h);
  auto dx = [&](const std::vector<double>& f, int i, int j) {
    return (g.get(f, i + 1, j) - g.get(f, i - 1, j)) * inv2h;
  };
  auto dy = [&](const std::vector<double>& f, int i, int j) {
    return (g.get(f, i, j + 1) - g.get(f, i, j - 1)) * inv2h;
  };

  // Moment components M_x = x T_xy - y T_xx, M_y = x T_yy - y T_yx.
  std::vector<double> mx(g.xx.size()), my(g.xx.size());
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double x = i * g.h;
      const double y = j * g.h;
      mx[static_cast<std::size_t>(j) * n + i] =
          x * g.get(g.xy, i, j) - y * g.get(g.xx, i, j);
      my[static_cast<std::size_t>(j) * n + i] =
          x * g.get(g.yy, i, j) - y * g.get(g.yx, i, j);
    }
  }

  double worst = 0.0;
  for (int j = 1; j + 1 < n; ++j) {
    for (int i = 1; i + 1 < n; ++i) {
      const double x = i * g.h;
      const double y = j * g.h;
      const double div_moment = dx(mx, i, j) + dy(my, i, j);
      const double div_t_x = dx(g.xx, i, j) + dy(g.yx, i, j);
      const double div_t_y = dx(g.xy, i, j) + dy(g.yy, i, j);
      const double residual = div_moment - (x * div_t_y - y * div_t_x);
      worst = std::max(worst, std::abs(residual));
    }
  }
  return worst;
}

TensorGrid constitutive_tensor_grid(const PlanarFieldSpec& field, int nodes,
                                    const core::GasModel& gas,
                                    const core::TransportCoefficients& coeffs) {
  TensorGrid g;
  g.nodes = nodes;
  g.h = 1.0 / (nodes - 1);
  const auto size = static_cast<std::size_t>(nodes) * nodes;
  g.xx.resize(size);
  g.xy.resize(size);
  g.yx.resize(size);
  g.yy.resize(size);
  for (int j = 0; j < nodes; ++j) {
    for (int i = 0; i < nodes; ++i) {
      const double x = i * g.h;
      const double y = j * g.h;
      const double rho = field.density(x, y);
      const double t = field.temperature(x, y);
      const auto grad_u = field.velocity_gradient(x, y);
      const auto grad_rho = field.density_gradient(x, y);
      const auto hess_rho = field.density_hessian(x, y);
      const double mu = coeffs.mu_at(t);
      const double eta = coeffs.eta_at(t);

      constitutive::Mat3 gu{};
      gu(0, 0) = grad_u[0];
      gu(0, 1) = grad_u[1];
      gu(1, 0) = grad_u[2];
      gu(1, 1) = grad_u[3];
      const auto pi_um = constitutive::newtonian_stress(gu, mu, eta);

      constitutive::Mat3 gj{};
      const double km = coeffs.kappa_m();
      const std::array<double, 4> hess = {hess_rho[0], hess_rho[1],
                                          hess_rho[1], hess_rho[2]};
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          const double ga = a == 0 ? grad_rho[0] : grad_rho[1];
          const double gb = b == 0 ? grad_rho[0] : grad_rho[1];
          gj(a, b) = km * (hess[static_cast<std::size_t>(2 * a + b)] / rho -
                           ga * gb / (rho * rho));
        }
      }
      const auto pi_jv = constitutive::newtonian_stress(gj, mu, eta);

      const double pressure = rho * gas.gas_constant * t;
      g.at(g.xx, i, j) = pressure + pi_um(0, 0) + pi_jv(0, 0);
      g.at(g.xy, i, j) = pi_um(0, 1) + pi_jv(0, 1);
      g.at(g.yx, i, j) = pi_um(1, 0) + pi_jv(1, 0);
      g.at(g.yy, i, j) = pressure + pi_um(1, 1) + pi_jv(1, 1);
    }
  }
  return g;
}

TensorGrid antisymmetric_control_grid(int nodes, double* scale_out) {
  TensorGrid g;
  g.nodes = nodes;
  g.h = 1.0 / (nodes - 1);
  const auto size = static_cast<std::size_t>(nodes) * nodes;
  g.xx.assign(size, 0.0);
  g.yy.assign(size, 0.0);
  g.xy.resize(size);
  g.yx.resize(size);
  double max_bracket = 0.0;
  for (int j = 0; j < nodes; ++j) {
    for (int i = 0; i < nodes; ++i) {
      const double x = i * g.h;
      const double y = j * g.h;
      const double a = 0.4 + 0.3 * std::sin(2.0 * x + 0.1) * std::cos(1.4 * y + 0.5);
      g.at(g.xy, i, j) = a;
      g.at(g.yx, i, j) = -a;
      if (i > 0 && j > 0 && i + 1 < nodes && j + 1 < nodes) {
        max_bracket = std::max(max_bracket, std::abs(2.0 * a));
      }
    }
  }
  if (scale_out != nullptr) {
    *scale_out = max_bracket;
  }
  return g;
}

core::Field center_of_mass_quantity(const core::FlowState& state,
                                    const core::GasModel& gas, double t) {
  const auto& grid = state.grid;
  core::Field b(static_cast<std::size_t>(grid.n_cells));
  for (int i = 0; i < grid.n_cells; ++i) {
    const double rho = gas.molecular_mass * state.a_n[i];
    b[i] = rho * grid.center(i) - t * rho * state.u_m[i];
  }
  return b;
}

}  // namespace

GalileanStudy galilean_covariance_study(const std::vector<int>& cells,
                                        governing::ModelVariant variant,
                                        const core::GasModel& gas,
                                        const core::TransportCoefficients& coeffs) {
  const double boost = 1.0;
  const double t_end = 0.125;  // boost displacement = L/8 on the unit domain
  const auto profile = smooth_wave_profile();

  GalileanStudy study;
  study.boost_speed = boost;
  for (int n : cells) {
    if (n % 8 != 0) {
      throw core::ValidationError(
          "galilean_covariance_study: cell counts must be divisible by 8 so "
          "the boost displacement is an integer number of cells");
    }
    const auto grid = core::Grid1D::make(n, 1.0);
    auto lab0 = manufactured_state(grid, gas, profile,
                                   governing::ModelVariant::nsf_baseline);
    auto boosted0 = lab0;
    for (int i = 0; i < n; ++i) {
      boosted0.u_m[i] += boost;
    }

    solver::IntegratorConfig config;
    config.t_end = t_end;
    config.fixed_dt =
        0.9 * std::min(solver::stable_dt(lab0, gas, coeffs, config),
                       solver::stable_dt(boosted0, gas, coeffs, config));

    const auto lab = solver::run(variant, lab0, gas, coeffs, config);
    const auto boosted = solver::run(variant, boosted0, gas, coeffs, config);

    const int shift = n / 8;
    const auto& sl = lab.final().state;
    auto sb = boosted.final().state;
    for (int i = 0; i < n; ++i) {
      sb.u_m[i] -= boost;
    }
    const double mismatch = std::max({field_mismatch(sl.a_n, sb.a_n, shift),
                                      field_mismatch(sl.u_m, sb.u_m, shift),
                                      field_mismatch(sl.e_in, sb.e_in, shift)});
    study.mismatch.cells.push_back(static_cast<double>(n));
    study.mismatch.errors.push_back(mismatch);
  }
  study.mismatch.order =
      fit_convergence_order(study.mismatch.cells, study.mismatch.errors);
  return study;
}

IntegrabilityCheck integrability_check(governing::ModelVariant variant,
                                       const core::GasModel& gas,
                                       const core::TransportCoefficients& coeffs) {
  const auto grid = core::Grid1D::make(64, 1.0);
  auto state = core::random_smooth_state(grid, gas, 20240915u);
  if (governing::has_independent_volume(variant)) {
    // Perturb the volume away from the identified value so the check
    // exercises the genuinely independent field.
    for (int i = 0; i < grid.n_cells; ++i) {
      state.v_bar[i] *= 1.0 + 0.05 * std::sin(2.0 * M_PI * grid.center(i));
    }
  }

  IntegrabilityCheck check;
  const auto conserved = governing::to_conserved(state, gas, coeffs, variant);
  for (int i = 0; i < grid.n_cells; ++i) {
    check.max_momentum_identity_error = std::max(
        check.max_momentum_identity_error,
        std::abs(conserved.momentum[i] - conserved.density[i] * state.u_m[i]));
  }

  const auto rate = governing::rhs(variant, state, gas, coeffs);
  double sum_density = 0.0, sum_momentum = 0.0, sum_energy = 0.0;
  for (int i = 0; i < grid.n_cells; ++i) {
    sum_density += rate.density[i];
    sum_momentum += rate.momentum[i];
    sum_energy += rate.energy[i];
  }
  const double dx = grid.dx();
  check.max_conservation_sum =
      std::max({std::abs(sum_density), std::abs(sum_momentum),
                std::abs(sum_energy)}) *
      dx;
  return check;
}

AngularMomentumStudy angular_momentum_identity_study(
    const std::vector<int>& resolutions, const core::GasModel& gas,
    const core::TransportCoefficients& coeffs) {
  const WavyPlanarField field;
  AngularMomentumStudy study;
  for (int m : resolutions) {
    if (m < 8) {
      throw core::ValidationError(
          "angular_momentum_identity_study: resolutions must be >= 8");
    }
    const auto grid = constitutive_tensor_grid(field, m + 1, gas, coeffs);
    study.symmetric.cells.push_back(static_cast<double>(m));
    study.symmetric.errors.push_back(moment_identity_residual(grid));

    double scale = 0.0;
    const auto control = antisymmetric_control_grid(m + 1, &scale);
    study.antisymmetric_scale = std::max(study.antisymmetric_scale, scale);
    study.antisymmetric_residuals.push_back(moment_identity_residual(control));
  }
  study.symmetric.order =
      fit_convergence_order(study.symmetric.cells, study.symmetric.errors);
  return study;
}

CenterOfMassStudy center_of_mass_study(const std::vector<int>& cells,
                                       const core::GasModel& gas,
                                       const core::TransportCoefficients& coeffs) {
  const auto variant = governing::ModelVariant::bivelocity_reduced;
  const double sigma = 0.06;
  const double target_t = 0.05;

  CenterOfMassStudy study;
  for (int n : cells) {
    const auto grid = core::Grid1D::make(n, 1.0);
    core::FlowState initial(grid);
    for (int i = 0; i < n; ++i) {
      const double x = grid.center(i);
      const double bump = std::exp(-0.5 * (x - 0.5) * (x - 0.5) / (sigma * sigma));
      initial.a_n[i] = (1.0 + 0.3 * bump) / gas.molecular_mass;
      initial.u_m[i] = 0.0;
      initial.e_in[i] = gas.c_v * 1.0;
    }
    initial.identify_volume_with_density();

    solver::IntegratorConfig config;
    config.t_end = target_t;
    const double dt = 0.9 * solver::stable_dt(initial, gas, coeffs, config);
    const long steps = static_cast<long>(std::ceil(target_t / dt));
    config.fixed_dt = dt;

    config.t_end = static_cast<double>(steps) * dt;
    const auto run_a = solver::run(variant, initial, gas, coeffs, config);
    config.t_end = static_cast<double>(steps + 1) * dt;
    const auto run_b = solver::run(variant, initial, gas, coeffs, config);

    const auto& fa = run_a.final();
    const auto& fb = run_b.final();
    const double delta = fb.t - fa.t;

    core::FlowState mid(grid);
    for (int i = 0; i < n; ++i) {
      mid.a_n[i] = 0.5 * (fa.state.a_n[i] + fb.state.a_n[i]);
      mid.v_bar[i] = 0.5 * (fa.state.v_bar[i] + fb.state.v_bar[i]);
      mid.u_m[i] = 0.5 * (fa.state.u_m[i] + fb.state.u_m[i]);
      mid.e_in[i] = 0.5 * (fa.state.e_in[i] + fb.state.e_in[i]);
    }
    const double t_mid = 0.5 * (fa.t + fb.t);
    const auto fluxes = constitutive::flux_set(mid, gas, coeffs);
    const auto derived = core::derived_quantities(mid, gas);
    const auto b_a = center_of_mass_quantity(fa.state, gas, fa.t);
    const auto b_b = center_of_mass_quantity(fb.state, gas, fb.t);
    const auto b_mid = center_of_mass_quantity(mid, gas, t_mid);

    core::Field flux(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      flux[i] = b_mid[i] * mid.u_m[i] -
                t_mid * (derived.pressure[i] + fluxes.pi_v[i]);
    }
    const auto div_flux = core::divergence(grid, flux);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      const double residual = (b_b[i] - b_a[i]) / delta + div_flux[i];
      worst = std::max(worst, std::abs(residual));
    }
    study.residual.cells.push_back(static_cast<double>(n));
    study.residual.errors.push_back(worst);
  }
  study.residual.order =
      fit_convergence_order(study.residual.cells, study.residual.errors);
  return study;
}

MechanicalReport mechanical_checks() {
  const auto gas = core::GasModel::monatomic(1.0, 1.0);
  const core::TransportCoefficients coeffs(0.005, 0.005, 0.0125, 0.004);

  MechanicalReport report;
  report.galilean = galilean_covariance_study(
      {64, 128, 256}, governing::ModelVariant::bivelocity_reduced, gas, coeffs);
  for (auto variant : governing::all_variants) {
    const auto check = integrability_check(variant, gas, coeffs);
    report.integrability.max_momentum_identity_error =
        std::max(report.integrability.max_momentum_identity_error,
                 check.max_momentum_identity_error);
    report.integrability.max_conservation_sum =
        std::max(report.integrability.max_conservation_sum,
                 check.max_conservation_sum);
  }
  report.angular_momentum =
      angular_momentum_identity_study({16, 32, 64}, gas, coeffs);
  report.center_of_mass = center_of_mass_study({128, 256, 512}, gas, coeffs);
  return report;
}

}  // namespace bivel::analysis
