/// @file dispersion.cpp
/// @brief Plane-wave dispersion analysis of the linearized model variants.

#include "bivel/analysis/dispersion.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "bivel/core/errors.hpp"

namespace bivel::analysis {

namespace {

using Complex = std::complex<double>;
/// Dense polynomial in one complex variable, coefficients ascending by power.
using Poly = std::vector<Complex>;

Poly poly_add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

Poly poly_negate(Poly a) {
    for (auto& c : a) c = -c;
    return a;
}

/// Determinant of a square matrix of polynomials (cofactor expansion; the
/// systems here are 3x3 or 4x4, so the cost is irrelevant).
Poly poly_det(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly det;
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<Poly>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c) {
                if (c != col) row.push_back(m[r][c]);
            }
            minor.push_back(std::move(row));
        }
        Poly term = poly_mul(m[0][col], poly_det(minor));
        if (col % 2 == 1) term = poly_negate(std::move(term));
        det = poly_add(det, term);
    }
    return det;
}

/// Roots via the companion matrix of the monic normalization.
std::vector<Complex> poly_roots(Poly p) {
    double max_mag = 0.0;
    for (const auto& c : p) max_mag = std::max(max_mag, std::abs(c));
    if (max_mag == 0.0) {
        throw core::ValidationError("dispersion: determinant polynomial is identically zero");
    }
    while (p.size() > 1 && std::abs(p.back()) < 1e-13 * max_mag) p.pop_back();
    const int degree = static_cast<int>(p.size()) - 1;
    if (degree < 1) return {};

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
    for (int i = 0; i < degree; ++i) companion(i, degree - 1) = -p[static_cast<std::size_t>(i)] / p.back();
    for (int i = 1; i < degree; ++i) companion(i, i - 1) = Complex(1.0, 0.0);

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion);
    if (solver.info() != Eigen::Success) {
        throw core::ValidationError("dispersion: eigenvalue solve for polynomial roots failed");
    }
    std::vector<Complex> roots(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

Complex unit_power(Complex base, int exponent) {
    Complex out(1.0, 0.0);
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

/// Assemble the entry polynomials in k at fixed real frequency w.
std::vector<std::vector<Poly>> spatial_matrix(const DispersionSystem& system, double omega) {
    const Complex i_unit(0.0, 1.0);
    std::vector<std::vector<Poly>> m(
        static_cast<std::size_t>(system.dimension),
        std::vector<Poly>(static_cast<std::size_t>(system.dimension)));
    for (const auto& term : system.entries) {
        auto& entry = m[static_cast<std::size_t>(term.row)][static_cast<std::size_t>(term.col)];
        if (static_cast<int>(entry.size()) < term.k_pow + 1) {
            entry.resize(static_cast<std::size_t>(term.k_pow) + 1, Complex(0.0, 0.0));
        }
        const Complex factor = term.coeff * unit_power(i_unit, term.k_pow) *
                               unit_power(Complex(0.0, -omega), term.w_pow);
        entry[static_cast<std::size_t>(term.k_pow)] += factor;
    }
    for (auto& row : m) {
        for (auto& entry : row) {
            if (entry.empty()) entry = {Complex(0.0, 0.0)};
        }
    }
    return m;
}

/// Assemble the entry polynomials in w at fixed real wavenumber k.
std::vector<std::vector<Poly>> temporal_matrix(const DispersionSystem& system, double wavenumber) {
    const Complex i_unit(0.0, 1.0);
    std::vector<std::vector<Poly>> m(
        static_cast<std::size_t>(system.dimension),
        std::vector<Poly>(static_cast<std::size_t>(system.dimension)));
    for (const auto& term : system.entries) {
        auto& entry = m[static_cast<std::size_t>(term.row)][static_cast<std::size_t>(term.col)];
        if (static_cast<int>(entry.size()) < term.w_pow + 1) {
            entry.resize(static_cast<std::size_t>(term.w_pow) + 1, Complex(0.0, 0.0));
        }
        const Complex factor = term.coeff * unit_power(i_unit * wavenumber, term.k_pow) *
                               unit_power(Complex(0.0, -1.0), term.w_pow);
        entry[static_cast<std::size_t>(term.w_pow)] += factor;
    }
    for (auto& row : m) {
        for (auto& entry : row) {
            if (entry.empty()) entry = {Complex(0.0, 0.0)};
        }
    }
    return m;
}

void push(DispersionSystem& system, int row, int col, int k_pow, int w_pow, double coeff) {
    if (coeff != 0.0) system.entries.push_back({row, col, k_pow, w_pow, coeff});
}

} // namespace

DispersionSystem linearized_system(governing::ModelVariant variant,
                                   const UniformBackground& background,
                                   const core::GasModel& gas,
                                   const core::TransportCoefficients& coeffs) {
    if (background.rho0 <= 0.0 || background.T0 <= 0.0) {
        throw core::ValidationError("dispersion: background density and temperature must be positive");
    }
    if (coeffs.temperature_exponent() != 0.0) {
        throw core::ValidationError(
            "dispersion: the linearization assumes constant viscosity "
            "(temperature_exponent must be 0)");
    }
    const double rho0 = background.rho0;
    const double T0 = background.T0;
    const double R = gas.gas_constant;
    const double cv = gas.c_v;
    const double p0 = background.pressure(gas);
    const double a_v = coeffs.longitudinal_at(T0); // (4/3) mu
    const double kh = coeffs.kappa_h();
    const double km = coeffs.kappa_m();
    const double kk = coeffs.kappa_klim();

    DispersionSystem system;
    using governing::ModelVariant;
    switch (variant) {
    case ModelVariant::nsf_baseline:
    case ModelVariant::bivelocity_reduced: {
        // Rows: mass, momentum, energy; columns: density, velocity, temperature.
        const double km_eff = variant == ModelVariant::bivelocity_reduced ? km : 0.0;
        system.dimension = 3;
        push(system, 0, 0, 0, 1, 1.0);
        push(system, 0, 1, 1, 0, rho0);
        push(system, 1, 0, 1, 0, R * T0);
        push(system, 1, 0, 3, 0, -a_v * km_eff / rho0);
        push(system, 1, 1, 0, 1, rho0);
        push(system, 1, 1, 2, 0, -a_v);
        push(system, 1, 2, 1, 0, R * rho0);
        push(system, 2, 0, 0, 1, cv * T0);
        push(system, 2, 0, 2, 0, R * T0 * km_eff);
        push(system, 2, 1, 1, 0, rho0 * cv * T0 + p0);
        push(system, 2, 2, 0, 1, rho0 * cv);
        push(system, 2, 2, 2, 0, -kh);
        break;
    }
    case ModelVariant::klimontovich: {
        // NSF plus a Laplacian smoothing of every convected quantity.
        system.dimension = 3;
        push(system, 0, 0, 0, 1, 1.0);
        push(system, 0, 0, 2, 0, -kk);
        push(system, 0, 1, 1, 0, rho0);
        push(system, 1, 0, 1, 0, R * T0);
        push(system, 1, 1, 0, 1, rho0);
        push(system, 1, 1, 2, 0, -(a_v + kk * rho0));
        push(system, 1, 2, 1, 0, R * rho0);
        push(system, 2, 0, 0, 1, cv * T0);
        push(system, 2, 0, 2, 0, -kk * cv * T0);
        push(system, 2, 1, 1, 0, rho0 * cv * T0 + p0);
        push(system, 2, 2, 0, 1, rho0 * cv);
        push(system, 2, 2, 2, 0, -(kh + kk * cv * rho0));
        break;
    }
    case ModelVariant::volume_full: {
        // Rows: number density, momentum, energy, volume; columns: number
        // density, velocity, temperature, specific volume. Pressure-volume
        // couplings cancel in the momentum row and the linearized volume
        // production vanishes, so the volume row carries only its own
        // advection-diffusion balance and the acoustics match nsf_baseline.
        const double M = gas.molecular_mass;
        const double A0 = rho0 / M;
        const double vbar0 = M / rho0;
        system.dimension = 4;
        push(system, 0, 0, 0, 1, 1.0);
        push(system, 0, 1, 1, 0, A0);
        push(system, 1, 0, 1, 0, R * T0);
        push(system, 1, 1, 0, 1, A0);
        push(system, 1, 1, 2, 0, -a_v / M);
        push(system, 1, 2, 1, 0, R * A0);
        push(system, 1, 3, 3, 0, a_v * km / (M * vbar0));
        push(system, 2, 0, 0, 1, cv * T0);
        push(system, 2, 1, 1, 0, A0 * (cv + R) * T0);
        push(system, 2, 2, 0, 1, A0 * cv);
        push(system, 2, 2, 2, 0, -kh / M);
        push(system, 2, 3, 2, 0, -A0 * R * T0 * km / vbar0);
        push(system, 3, 3, 0, 1, 1.0);
        push(system, 3, 3, 2, 0, -km);
        break;
    }
    }
    return system;
}

std::vector<Complex> spatial_roots(governing::ModelVariant variant,
                                   const UniformBackground& background,
                                   const core::GasModel& gas,
                                   const core::TransportCoefficients& coeffs,
                                   double omega) {
    if (omega <= 0.0) {
        throw core::ValidationError("dispersion: driving frequency must be positive");
    }
    const auto system = linearized_system(variant, background, gas, coeffs);
    return poly_roots(poly_det(spatial_matrix(system, omega)));
}

DispersionResult dispersion_relation(governing::ModelVariant variant,
                                     const UniformBackground& background,
                                     const core::GasModel& gas,
                                     const core::TransportCoefficients& coeffs,
                                     const std::vector<double>& omegas) {
    DispersionResult result;
    result.variant = variant;
    const double c_ad = gas.sound_speed(background.T0);

    Complex previous(0.0, 0.0);
    double previous_omega = 0.0;
    for (double omega : omegas) {
        DispersionPoint point;
        point.omega = omega;
        point.roots = spatial_roots(variant, background, gas, coeffs, omega);

        const Complex expected = previous_omega > 0.0
                                     ? previous * (omega / previous_omega)
                                     : Complex(omega / c_ad, 0.0);
        double best = std::numeric_limits<double>::infinity();
        bool found = false;
        for (const auto& root : point.roots) {
            if (root.real() <= 0.0 || root.imag() < -1e-12 * std::abs(root)) continue;
            const double distance = std::abs(root - expected);
            if (distance < best) {
                best = distance;
                point.physical = root;
                found = true;
            }
        }
        if (!found) {
            throw core::ValidationError(
                "dispersion: no forward decaying root found; frequency may be "
                "outside the resolvable band for these coefficients");
        }
        point.phase_speed = omega / point.physical.real();
        point.attenuation = point.physical.imag();
        previous = point.physical;
        previous_omega = omega;
        result.points.push_back(std::move(point));
    }
    return result;
}

std::vector<Complex> temporal_modes(governing::ModelVariant variant,
                                    const UniformBackground& background,
                                    const core::GasModel& gas,
                                    const core::TransportCoefficients& coeffs,
                                    double wavenumber) {
    if (wavenumber <= 0.0) {
        throw core::ValidationError("dispersion: wavenumber must be positive");
    }
    const auto system = linearized_system(variant, background, gas, coeffs);
    return poly_roots(poly_det(temporal_matrix(system, wavenumber)));
}

double classical_absorption_coefficient(double omega,
                                        const UniformBackground& background,
                                        const core::GasModel& gas,
                                        const core::TransportCoefficients& coeffs) {
    const double c = gas.sound_speed(background.T0);
    const double losses = coeffs.longitudinal_at(background.T0) +
                          (gas.gamma() - 1.0) * coeffs.kappa_h() / gas.c_p();
    return omega * omega / (2.0 * background.rho0 * c * c * c) * losses;
}

} // namespace bivel::analysis
