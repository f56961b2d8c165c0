/// @file transport.hpp
/// @brief Transport coefficients for all model variants.

#pragma once

namespace bivel::core {

/// Transport coefficients shared by the model variants.
///
/// The volume viscosity eta' is tied to the shear viscosity by eta' = (2/3) mu'
/// exactly; the constructor enforces this so the stress tensor stays traceless
/// and a 1-D uniform shear U = a x produces the normal stress -(4/3) mu' a.
/// An optional power law mu'(T) = mu' (T/T_ref)^s covers temperature-dependent
/// viscosity; eta'(T) tracks it so the ratio never drifts.
class TransportCoefficients {
public:
    /// All coefficients must be >= 0; throws ValidationError otherwise.
    TransportCoefficients(double mu, double kappa_m, double kappa_h,
                          double kappa_klim = 0.0,
                          double temperature_exponent = 0.0,
                          double reference_temperature = 1.0);

    double mu() const { return mu_; }               ///< shear viscosity mu' (Pa s)
    double eta() const { return eta_; }             ///< volume viscosity eta' = (2/3) mu'
    double kappa_m() const { return kappa_m_; }     ///< volume diffusivity kappa_m (m^2/s)
    double kappa_h() const { return kappa_h_; }     ///< heat conductivity kappa'_h (W/(m K))
    double kappa_klim() const { return kappa_klim_; } ///< Laplacian mass-diffusion coefficient (m^2/s)
    double temperature_exponent() const { return temperature_exponent_; }
    double reference_temperature() const { return reference_temperature_; }

    /// mu'(T) under the power law (identity when the exponent is 0).
    double mu_at(double temperature) const;
    /// eta'(T) = (2/3) mu'(T).
    double eta_at(double temperature) const;
    /// 1-D longitudinal viscous coefficient 2 mu'(T) - eta'(T) = (4/3) mu'(T).
    double longitudinal_at(double temperature) const;

private:
    double mu_;
    double eta_;
    double kappa_m_;
    double kappa_h_;
    double kappa_klim_;
    double temperature_exponent_;
    double reference_temperature_;
};

} // namespace bivel::core
