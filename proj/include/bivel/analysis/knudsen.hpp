/// @file knudsen.hpp
/// @brief Knudsen-number scaling of the entropy-budget term groups.

#pragma once

#include <string>
#include <vector>

#include "bivel/analysis/reference_scales.hpp"

namespace bivel::analysis {

/// Fixed dimensionless fields for the scaling sweep: single-mode sinusoids
/// in starred variables.  Holding these fixed while the mean free path
/// varies isolates the Knudsen-power prefactor of each budget group.
struct StarredProfile {
  double rho_amp = 0.2;
  double u_amp = 0.2;
  double T_amp = 0.2;
  double rho_phase = 0.0;
  double u_phase = 0.7;
  double T_phase = 1.9;
};

/// Nondimensional magnitude of every budget group at one Knudsen number.
struct KnudsenPoint {
  double knudsen = 0.0;
  std::vector<std::pair<std::string, double>> magnitudes;
};

/// Fitted power-law exponent of one group across the sweep.
struct GroupSlope {
  std::string name;
  int expected_order = 0;
  double slope = 0.0;
};

/// A completed sweep: points sorted by Knudsen number plus fitted slopes.
struct KnudsenStudy {
  std::vector<KnudsenPoint> points;
  std::vector<GroupSlope> slopes;

  double slope_of(const std::string& name) const;
};

/// Nondimensional volume-budget group magnitudes at a single Knudsen number
/// (one sweep point, evaluated on the starred fields).
KnudsenPoint knudsen_ordering_point(double knudsen, const StarredProfile& profile,
                                    int n_cells, const ReferenceScales& base);

/// Sweeps the mean free path at fixed starred fields and fits the log-log
/// slope of each volume-budget group's integrated magnitude against the
/// Knudsen number.  Expected slopes: heat conduction and mass shear 1, the
/// two cross groups 2, and the drift-drift group 3.  Requires at least four
/// sweep values.  Points are evaluated concurrently and merged in Knudsen
/// order.
KnudsenStudy knudsen_ordering_study(const std::vector<double>& knudsens,
                                    const StarredProfile& profile, int n_cells,
                                    const ReferenceScales& base);

/// Same sweep for the reduced-model indefinite residual -(1/T) j_v div Pi_v.
/// On a generic field the mass-velocity stress dominates and the residual
/// scales as Kn^2; with u_amp = 0 the mass shear vanishes identically and
/// the pure drift part scales as Kn^3.
KnudsenStudy reduced_residual_study(const std::vector<double>& knudsens,
                                    const StarredProfile& profile, int n_cells,
                                    const ReferenceScales& base);

}  // namespace bivel::analysis
