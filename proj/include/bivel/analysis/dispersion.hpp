/// @file dispersion.hpp
/// @brief Plane-wave dispersion analysis of the linearized model variants.

#pragma once

#include <complex>
#include <vector>

#include "bivel/core/gas_model.hpp"
#include "bivel/core/transport.hpp"
#include "bivel/governing/variant.hpp"

namespace bivel::analysis {

/// Quiescent uniform background about which the equations are linearized.
struct UniformBackground {
    double rho0 = 1.0; ///< background mass density
    double T0 = 1.0;   ///< background temperature

    double pressure(const core::GasModel& gas) const { return rho0 * gas.gas_constant * T0; }
};

/// One term coeff * (ik)^k_pow * (-iw)^w_pow of a linearized-system entry.
///
/// Perturbations are proportional to exp(i(kx - wt)), so each spatial
/// derivative contributes a factor ik and each time derivative a factor -iw.
/// All real coefficients of the four variants fit this shape, which keeps the
/// tables auditable and lets both the spatial problem (polynomial in k at real
/// w) and the temporal problem (polynomial in w at real k) share one source.
struct Monomial {
    int row = 0;
    int col = 0;
    int k_pow = 0;
    int w_pow = 0;
    double coeff = 0.0;
};

/// The linearized system matrix of a variant as a monomial list.
///
/// nsf_baseline / bivelocity_reduced / klimontovich couple (density, velocity,
/// temperature) perturbations (3x3); volume_full couples (number density,
/// velocity, temperature, specific volume) (4x4), where the volume row
/// decouples into a pure diffusion mode.
struct DispersionSystem {
    int dimension = 0;
    std::vector<Monomial> entries;
};

DispersionSystem linearized_system(governing::ModelVariant variant,
                                   const UniformBackground& background,
                                   const core::GasModel& gas,
                                   const core::TransportCoefficients& coeffs);

/// Spatial solution at one real driving frequency.
struct DispersionPoint {
    double omega = 0.0;
    std::vector<std::complex<double>> roots; ///< all spatial wavenumbers
    std::complex<double> physical;           ///< forward decaying acoustic branch
    double phase_speed = 0.0;                ///< omega / Re(k)
    double attenuation = 0.0;                ///< Im(k), spatial decay rate
};

struct DispersionResult {
    governing::ModelVariant variant;
    std::vector<DispersionPoint> points;
};

/// All spatial wavenumber roots det = 0 at one real frequency w > 0.
std::vector<std::complex<double>> spatial_roots(governing::ModelVariant variant,
                                                const UniformBackground& background,
                                                const core::GasModel& gas,
                                                const core::TransportCoefficients& coeffs,
                                                double omega);

/// Sweep the forward acoustic branch over driving frequencies.
///
/// For each frequency the branch is the root with Re(k) > 0 and Im(k) >= 0
/// nearest the previous selection (initialized at omega / adiabatic sound
/// speed), so the curve stays on one sheet across the sweep.
DispersionResult dispersion_relation(governing::ModelVariant variant,
                                     const UniformBackground& background,
                                     const core::GasModel& gas,
                                     const core::TransportCoefficients& coeffs,
                                     const std::vector<double>& omegas);

/// Complex frequencies of the initial-value problem at one real wavenumber,
/// sorted by real part, then imaginary part. Im(w) < 0 means temporal decay.
std::vector<std::complex<double>> temporal_modes(governing::ModelVariant variant,
                                                 const UniformBackground& background,
                                                 const core::GasModel& gas,
                                                 const core::TransportCoefficients& coeffs,
                                                 double wavenumber);

/// Classical low-frequency sound absorption from longitudinal viscosity and
/// heat conduction: w^2 / (2 rho0 c^3) * [(4/3) mu + (gamma - 1) kappa_h / c_p].
double classical_absorption_coefficient(double omega,
                                        const UniformBackground& background,
                                        const core::GasModel& gas,
                                        const core::TransportCoefficients& coeffs);

} // namespace bivel::analysis
