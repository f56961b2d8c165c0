/// @file knudsen.cpp
/// @brief Knudsen-number scaling of the entropy-budget term groups.

#include "bivel/analysis/knudsen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <string>
#include <utility>

#include "bivel/analysis/entropy_budget.hpp"
#include "bivel/analysis/fit.hpp"
#include "bivel/constitutive/fluxes.hpp"
#include "bivel/core/errors.hpp"
#include "bivel/core/flow_state.hpp"
#include "bivel/core/gas_model.hpp"
#include "bivel/core/grid.hpp"
#include "bivel/core/transport.hpp"

namespace bivel::analysis {

namespace {

core::FlowState starred_state(const core::Grid1D& grid,
                              const StarredProfile& profile,
                              const ReferenceScales& scales,
                              const core::GasModel& gas) {
  core::FlowState state(grid);
  for (int i = 0; i < grid.n_cells; ++i) {
    const double xs = grid.center(i) / grid.length;
    const double arg = 2.0 * M_PI * xs;
    const double rho =
        scales.density * (1.0 + profile.rho_amp * std::sin(arg + profile.rho_phase));
    const double u =
        scales.molecular_speed * profile.u_amp * std::sin(arg + profile.u_phase);
    const double t = scales.temperature *
                     (1.0 + profile.T_amp * std::sin(arg + profile.T_phase));
    state.a_n[i] = rho / gas.molecular_mass;
    state.u_m[i] = u;
    state.e_in[i] = gas.c_v * t;
  }
  state.identify_volume_with_density();
  return state;
}

ReferenceScales scales_at(const ReferenceScales& base, double knudsen) {
  ReferenceScales s = base;
  s.mean_free_path = knudsen * base.macroscopic_length;
  s.validate();
  return s;
}

core::TransportCoefficients reference_coefficients(const ReferenceScales& s) {
  return core::TransportCoefficients(s.mu0(), s.kappa_m0(), s.kappa_h0(),
                                     s.kappa_m0());
}

void require_sweep_size(const std::vector<double>& knudsens) {
  if (knudsens.size() < 4) {
    throw core::ValidationError(
        "knudsen sweep: need at least 4 sweep values, got " +
        std::to_string(knudsens.size()));
  }
  for (double kn : knudsens) {
    if (!(kn > 0.0)) {
      throw core::ValidationError("knudsen sweep: values must be positive");
    }
  }
}

KnudsenStudy run_study(
    const std::vector<double>& knudsens,
    const std::vector<std::pair<std::string, int>>& groups,
    const std::function<KnudsenPoint(double)>& evaluate) {
  require_sweep_size(knudsens);

  std::vector<std::future<KnudsenPoint>> futures;
  futures.reserve(knudsens.size());
  for (double kn : knudsens) {
    futures.push_back(std::async(std::launch::async, evaluate, kn));
  }
  KnudsenStudy study;
  study.points.reserve(knudsens.size());
  for (auto& f : futures) {
    study.points.push_back(f.get());
  }
  std::sort(study.points.begin(), study.points.end(),
            [](const KnudsenPoint& a, const KnudsenPoint& b) {
              return a.knudsen < b.knudsen;
            });

  std::vector<double> kns;
  kns.reserve(study.points.size());
  for (const auto& p : study.points) {
    kns.push_back(p.knudsen);
  }
  for (const auto& [name, order] : groups) {
    std::vector<double> mags;
    mags.reserve(study.points.size());
    for (const auto& p : study.points) {
      const auto it = std::find_if(
          p.magnitudes.begin(), p.magnitudes.end(),
          [&name = name](const auto& entry) { return entry.first == name; });
      mags.push_back(it->second);
    }
    GroupSlope gs;
    gs.name = name;
    gs.expected_order = order;
    gs.slope = fit_loglog(kns, mags).slope;
    study.slopes.push_back(std::move(gs));
  }
  return study;
}

}  // namespace

double KnudsenStudy::slope_of(const std::string& name) const {
  for (const auto& s : slopes) {
    if (s.name == name) {
      return s.slope;
    }
  }
  throw core::ValidationError("knudsen study has no group named '" + name + "'");
}

KnudsenPoint knudsen_ordering_point(double knudsen, const StarredProfile& profile,
                                    int n_cells, const ReferenceScales& base) {
  const core::GasModel gas =
      core::GasModel::monatomic(base.molecular_mass, base.gas_constant());
  const auto grid = core::Grid1D::make(n_cells, base.macroscopic_length);
  const auto scales = scales_at(base, knudsen);
  const auto coeffs = reference_coefficients(scales);
  const auto state = starred_state(grid, profile, scales, gas);
  const auto fluxes = constitutive::flux_set(state, gas, coeffs);
  const auto budget = entropy_budget_volume(state, fluxes, gas, coeffs);
  KnudsenPoint point;
  point.knudsen = knudsen;
  const double rate_scale = scales.entropy_rate_scale();
  for (const auto& term : budget.terms) {
    point.magnitudes.emplace_back(term.name, term.magnitude / rate_scale);
  }
  return point;
}

KnudsenStudy knudsen_ordering_study(const std::vector<double>& knudsens,
                                    const StarredProfile& profile, int n_cells,
                                    const ReferenceScales& base) {
  auto evaluate = [&](double kn) {
    return knudsen_ordering_point(kn, profile, n_cells, base);
  };

  const std::vector<std::pair<std::string, int>> groups = {
      {"heat_conduction", 1}, {"shear_mass", 1},   {"cross_mass_drift", 2},
      {"cross_drift_mass", 2}, {"drift_drift", 3},
  };
  return run_study(knudsens, groups, evaluate);
}

KnudsenStudy reduced_residual_study(const std::vector<double>& knudsens,
                                    const StarredProfile& profile, int n_cells,
                                    const ReferenceScales& base) {
  const core::GasModel gas =
      core::GasModel::monatomic(base.molecular_mass, base.gas_constant());
  const auto grid = core::Grid1D::make(n_cells, base.macroscopic_length);

  auto evaluate = [&, grid](double kn) {
    const auto scales = scales_at(base, kn);
    const auto coeffs = reference_coefficients(scales);
    const auto state = starred_state(grid, profile, scales, gas);
    const auto fluxes = constitutive::flux_set(state, gas, coeffs);
    const auto budget = entropy_budget_reduced(state, fluxes, gas, coeffs);
    KnudsenPoint point;
    point.knudsen = kn;
    const double rate_scale = scales.mass_entropy_rate_scale();
    point.magnitudes.emplace_back(
        "drift_residual", budget.term("drift_residual").magnitude / rate_scale);
    return point;
  };

  const int expected = profile.u_amp == 0.0 ? 3 : 2;
  const std::vector<std::pair<std::string, int>> groups = {
      {"drift_residual", expected},
  };
  return run_study(knudsens, groups, evaluate);
}

}  // namespace bivel::analysis
