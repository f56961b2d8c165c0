/// @file entropy_budget.cpp
/// @brief Named entropy-rate terms for each model family.

#include "bivel/analysis/entropy_budget.hpp"

#include <string>

#include "bivel/core/errors.hpp"

namespace bivel::analysis {

namespace {

BudgetTerm make_term(std::string name, int knudsen_order, core::Field values,
                     const core::Grid1D& grid) {
  BudgetTerm term;
  term.name = std::move(name);
  term.knudsen_order = knudsen_order;
  term.integral = core::integrate(grid, values);
  term.magnitude = core::integrate_abs(grid, values);
  term.values = std::move(values);
  return term;
}

EntropyBudget assemble(std::vector<BudgetTerm> terms, const core::Grid1D& grid) {
  EntropyBudget budget;
  budget.total.assign(static_cast<std::size_t>(grid.n_cells), 0.0);
  for (const auto& term : terms) {
    for (int i = 0; i < grid.n_cells; ++i) {
      budget.total[i] += term.values[i];
    }
  }
  budget.total_integral = core::integrate(grid, budget.total);
  budget.terms = std::move(terms);
  return budget;
}

}  // namespace

const BudgetTerm& EntropyBudget::term(std::string_view name) const {
  for (const auto& t : terms) {
    if (t.name == name) {
      return t;
    }
  }
  throw core::ValidationError("entropy budget has no term named '" +
                              std::string(name) + "'");
}

EntropyBudget entropy_budget_volume(const core::FlowState& state,
                                    const constitutive::FluxSet& fluxes,
                                    const core::GasModel& gas,
                                    const core::TransportCoefficients& coeffs) {
  (void)coeffs;
  const auto& grid = state.grid;
  const int n = grid.n_cells;
  const auto derived = core::derived_quantities(state, gas);
  const auto grad_u = core::gradient(grid, state.u_m);
  const auto grad_jv = core::gradient(grid, fluxes.jv);

  // The conductive entropy flux is -A_n q_s = (A_n/rho) kappa_h grad T.
  core::Field conductive_flux(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    conductive_flux[i] = -state.a_n[i] * fluxes.q_s[i];
  }
  auto heat = core::divergence(grid, conductive_flux);

  core::Field shear_mass(static_cast<std::size_t>(n));
  core::Field cross_mass_drift(static_cast<std::size_t>(n));
  core::Field cross_drift_mass(static_cast<std::size_t>(n));
  core::Field drift_drift(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double weight = state.a_n[i] / derived.rho_bar[i];
    shear_mass[i] = -weight * fluxes.pi_um[i] * grad_u[i];
    cross_mass_drift[i] = -weight * fluxes.pi_um[i] * grad_jv[i];
    cross_drift_mass[i] = -weight * fluxes.pi_jv[i] * grad_u[i];
    drift_drift[i] = -weight * fluxes.pi_jv[i] * grad_jv[i];
  }

  std::vector<BudgetTerm> terms;
  terms.push_back(make_term("heat_conduction", 1, std::move(heat), grid));
  terms.push_back(make_term("shear_mass", 1, std::move(shear_mass), grid));
  terms.push_back(make_term("cross_mass_drift", 2, std::move(cross_mass_drift), grid));
  terms.push_back(make_term("cross_drift_mass", 2, std::move(cross_drift_mass), grid));
  terms.push_back(make_term("drift_drift", 3, std::move(drift_drift), grid));
  return assemble(std::move(terms), grid);
}

EntropyBudget entropy_budget_klimontovich(
    const core::FlowState& state, const core::GasModel& gas,
    const core::TransportCoefficients& coeffs) {
  const auto& grid = state.grid;
  const int n = grid.n_cells;
  const auto derived = core::derived_quantities(state, gas);
  const double kappa = coeffs.kappa_klim();
  const double kappa_h = coeffs.kappa_h();
  const double r_gas = gas.gas_constant;
  const double c_v = gas.c_v;

  const auto grad_rho = core::gradient(grid, derived.rho_bar);
  const auto grad_t = core::gradient(grid, derived.temperature);
  const auto grad_u = core::gradient(grid, state.u_m);

  core::Field ratio_rho_t(static_cast<std::size_t>(n));
  core::Field ratio_rho(static_cast<std::size_t>(n));
  core::Field ratio_t(static_cast<std::size_t>(n));
  {
    core::Field rho_t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      rho_t[i] = derived.rho_bar[i] * derived.temperature[i];
    }
    const auto grad_rho_t = core::gradient(grid, rho_t);
    for (int i = 0; i < n; ++i) {
      ratio_rho_t[i] = grad_rho_t[i] / rho_t[i];
      ratio_rho[i] = grad_rho[i] / derived.rho_bar[i];
      ratio_t[i] = grad_t[i] / derived.temperature[i];
    }
  }
  const auto div_rho_t = core::divergence(grid, ratio_rho_t);
  const auto div_rho = core::divergence(grid, ratio_rho);
  const auto div_t = core::divergence(grid, ratio_t);

  core::Field mass_heat_flux(static_cast<std::size_t>(n));
  core::Field mass_flux(static_cast<std::size_t>(n));
  core::Field heat_flux(static_cast<std::size_t>(n));
  core::Field velocity_production(static_cast<std::size_t>(n));
  core::Field shear_production(static_cast<std::size_t>(n));
  core::Field temperature_production(static_cast<std::size_t>(n));
  core::Field indefinite(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double rho = derived.rho_bar[i];
    const double t = derived.temperature[i];
    mass_heat_flux[i] = rho * kappa * c_v * div_rho_t[i];
    mass_flux[i] = -rho * kappa * (r_gas + c_v) * div_rho[i];
    heat_flux[i] = kappa_h * div_t[i];
    velocity_production[i] = kappa * rho / t * grad_u[i] * grad_u[i];
    const double pi = -coeffs.longitudinal_at(t) * grad_u[i];
    shear_production[i] = -pi * grad_u[i] / t;
    temperature_production[i] =
        (kappa_h + rho * kappa * c_v) / (t * t) * grad_t[i] * grad_t[i];
    indefinite[i] = 2.0 * kappa * c_v / t * grad_rho[i] * grad_t[i] -
                    kappa * r_gas / rho * grad_rho[i] * grad_rho[i];
  }

  std::vector<BudgetTerm> terms;
  terms.push_back(make_term("mass_heat_flux", 0, std::move(mass_heat_flux), grid));
  terms.push_back(make_term("mass_flux", 0, std::move(mass_flux), grid));
  terms.push_back(make_term("heat_flux", 0, std::move(heat_flux), grid));
  terms.push_back(make_term("velocity_production", 0, std::move(velocity_production), grid));
  terms.push_back(make_term("shear_production", 0, std::move(shear_production), grid));
  terms.push_back(make_term("temperature_production", 0, std::move(temperature_production), grid));
  terms.push_back(make_term("indefinite_group", 0, std::move(indefinite), grid));
  return assemble(std::move(terms), grid);
}

EntropyBudget entropy_budget_reduced(const core::FlowState& state,
                                     const constitutive::FluxSet& fluxes,
                                     const core::GasModel& gas,
                                     const core::TransportCoefficients& coeffs) {
  const auto& grid = state.grid;
  const int n = grid.n_cells;
  const auto derived = core::derived_quantities(state, gas);
  const auto grad_t = core::gradient(grid, derived.temperature);
  const auto grad_uv = core::gradient(grid, fluxes.u_v);
  const auto div_pi = core::gradient(grid, fluxes.pi_v);

  // Entropic flux -kappa_h grad T + R T kappa_m grad rho; the second piece
  // equals p * j_v, reusing the constitutive drift velocity.
  core::Field entropic_flux_values(static_cast<std::size_t>(n));
  {
    core::Field s_flux(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      s_flux[i] = -coeffs.kappa_h() * grad_t[i] +
                  derived.pressure[i] * fluxes.jv[i];
    }
    const auto div_s = core::divergence(grid, s_flux);
    for (int i = 0; i < n; ++i) {
      entropic_flux_values[i] = -div_s[i] / derived.temperature[i];
    }
  }

  core::Field definite(static_cast<std::size_t>(n));
  core::Field residual(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = derived.temperature[i];
    definite[i] = -fluxes.pi_v[i] * grad_uv[i] / t;
    residual[i] = -fluxes.jv[i] * div_pi[i] / t;
  }

  std::vector<BudgetTerm> terms;
  terms.push_back(make_term("entropic_flux", 0, std::move(entropic_flux_values), grid));
  terms.push_back(make_term("definite_production", 0, std::move(definite), grid));
  terms.push_back(make_term("drift_residual", 0, std::move(residual), grid));
  return assemble(std::move(terms), grid);
}

BudgetClosure budget_closure_volume(const solver::Frame& before,
                                    const solver::Frame& after,
                                    const core::GasModel& gas,
                                    const core::TransportCoefficients& coeffs) {
  const auto& grid = before.state.grid;
  if (after.state.grid.n_cells != grid.n_cells ||
      after.state.grid.length != grid.length) {
    throw core::ValidationError("budget_closure_volume: snapshot grids differ");
  }
  if (!(after.t > before.t)) {
    throw core::ValidationError(
        "budget_closure_volume: needs two snapshots at distinct, increasing "
        "times for the material-derivative path");
  }
  const int n = grid.n_cells;
  const double dt = after.t - before.t;

  core::FlowState mid(grid);
  for (int i = 0; i < n; ++i) {
    mid.a_n[i] = 0.5 * (before.state.a_n[i] + after.state.a_n[i]);
    mid.v_bar[i] = 0.5 * (before.state.v_bar[i] + after.state.v_bar[i]);
    mid.u_m[i] = 0.5 * (before.state.u_m[i] + after.state.u_m[i]);
    mid.e_in[i] = 0.5 * (before.state.e_in[i] + after.state.e_in[i]);
  }

  const auto fx_before = constitutive::flux_set(before.state, gas, coeffs);
  const auto fx_after = constitutive::flux_set(after.state, gas, coeffs);
  const auto fx_mid = constitutive::flux_set(mid, gas, coeffs);
  const auto derived_mid = core::derived_quantities(mid, gas);

  // frak = e_in - j_v^2/2 and q = A_n/rho = A_n v / M per snapshot.
  core::Field frak_before(static_cast<std::size_t>(n));
  core::Field frak_after(static_cast<std::size_t>(n));
  core::Field frak_mid(static_cast<std::size_t>(n));
  core::Field q_before(static_cast<std::size_t>(n));
  core::Field q_after(static_cast<std::size_t>(n));
  core::Field q_mid(static_cast<std::size_t>(n));
  const double inv_mass = 1.0 / gas.molecular_mass;
  for (int i = 0; i < n; ++i) {
    frak_before[i] = before.state.e_in[i] - 0.5 * fx_before.jv[i] * fx_before.jv[i];
    frak_after[i] = after.state.e_in[i] - 0.5 * fx_after.jv[i] * fx_after.jv[i];
    frak_mid[i] = mid.e_in[i] - 0.5 * fx_mid.jv[i] * fx_mid.jv[i];
    q_before[i] = before.state.a_n[i] * before.state.v_bar[i] * inv_mass;
    q_after[i] = after.state.a_n[i] * after.state.v_bar[i] * inv_mass;
    q_mid[i] = mid.a_n[i] * mid.v_bar[i] * inv_mass;
  }
  const auto grad_frak = core::gradient(grid, frak_mid);
  const auto grad_q = core::gradient(grid, q_mid);

  BudgetClosure closure;
  closure.lhs.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double d_frak = (frak_after[i] - frak_before[i]) / dt +
                          mid.u_m[i] * grad_frak[i];
    const double d_q = (q_after[i] - q_before[i]) / dt + mid.u_m[i] * grad_q[i];
    closure.lhs[i] = mid.a_n[i] * d_frak - derived_mid.pressure[i] * d_q;
  }
  closure.rhs = entropy_budget_volume(mid, fx_mid, gas, coeffs).total;
  closure.lhs_integral = core::integrate(grid, closure.lhs);
  closure.rhs_integral = core::integrate(grid, closure.rhs);
  core::Field diff(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    diff[i] = closure.lhs[i] - closure.rhs[i];
  }
  closure.residual_integral = core::integrate_abs(grid, diff);
  return closure;
}

}  // namespace bivel::analysis
