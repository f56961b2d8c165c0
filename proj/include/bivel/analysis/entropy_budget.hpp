/// @file entropy_budget.hpp
/// @brief Named entropy-rate terms for each model family.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bivel/constitutive/fluxes.hpp"
#include "bivel/core/flow_state.hpp"
#include "bivel/core/gas_model.hpp"
#include "bivel/core/transport.hpp"
#include "bivel/solver/integrator.hpp"

namespace bivel::analysis {

/// One named contribution to an entropy-rate balance.
struct BudgetTerm {
  std::string name;
  /// Power of the Knudsen number this term carries in the nondimensional
  /// form of the volume-model budget; zero when not applicable.
  int knudsen_order = 0;
  core::Field values;      ///< per-cell contribution
  double integral = 0.0;   ///< domain integral of values
  double magnitude = 0.0;  ///< domain integral of |values|
};

/// A full entropy-rate balance: the named terms and their per-cell sum,
/// which is the assembled entropy-rate field.
struct EntropyBudget {
  std::vector<BudgetTerm> terms;
  core::Field total;
  double total_integral = 0.0;

  /// Looks a term up by name; throws core::ValidationError when absent.
  const BudgetTerm& term(std::string_view name) const;
};

/// Entropy rate of the volume-based model, split into the heat-conduction
/// divergence and the four stress-times-gradient products.  The per-cell sum
/// equals A_n T' Ds/Dt.  Term names and Knudsen orders:
///   heat_conduction   (1)  div[(A_n/rho) kappa_h grad T]
///   shear_mass        (1)  -(A_n/rho) Pi_Um . grad U_m
///   cross_mass_drift  (2)  -(A_n/rho) Pi_Um . grad j_v
///   cross_drift_mass  (2)  -(A_n/rho) Pi_Jv . grad U_m
///   drift_drift       (3)  -(A_n/rho) Pi_Jv . grad j_v
EntropyBudget entropy_budget_volume(const core::FlowState& state,
                                    const constitutive::FluxSet& fluxes,
                                    const core::GasModel& gas,
                                    const core::TransportCoefficients& coeffs);

/// Entropy rate of the Klimontovich model: three flux-divergence groups,
/// three nonnegative productions, and the sign-indefinite group
///   indefinite_group = (2 kappa c_v / T) grad rho . grad T
///                      - (kappa R / rho) |grad rho|^2.
/// The per-cell sum equals rho Ds/Dt.
EntropyBudget entropy_budget_klimontovich(const core::FlowState& state,
                                          const core::GasModel& gas,
                                          const core::TransportCoefficients& coeffs);

/// Entropy rate of the reduced bivelocity model under the classical
/// local-equilibrium entropy: the entropic-flux divergence, the nonnegative
/// production -(1/T) Pi_v . grad U_v, and the sign-indefinite residual
/// -(1/T) j_v (div Pi_v) that obstructs a positivity proof.  The per-cell
/// sum equals rho Ds/Dt.
EntropyBudget entropy_budget_reduced(const core::FlowState& state,
                                     const constitutive::FluxSet& fluxes,
                                     const core::GasModel& gas,
                                     const core::TransportCoefficients& coeffs);

/// Two-snapshot closure check of the volume-model budget: the left side is
/// evaluated through the Gibbs-type definition
///   A_n D(e_in - j_v^2/2)/Dt - p' D(A_n/rho)/Dt
/// with central time differences between the two frames and advective
/// derivatives on the averaged mid-state; the right side is the budget total
/// on the mid-state.  The residual converges at second order in dx and dt.
struct BudgetClosure {
  core::Field lhs;
  core::Field rhs;
  double lhs_integral = 0.0;
  double rhs_integral = 0.0;
  double residual_integral = 0.0;  ///< domain integral of |lhs - rhs|
};

BudgetClosure budget_closure_volume(const solver::Frame& before,
                                    const solver::Frame& after,
                                    const core::GasModel& gas,
                                    const core::TransportCoefficients& coeffs);

}  // namespace bivel::analysis
