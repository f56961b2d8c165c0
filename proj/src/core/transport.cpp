#include "bivel/core/transport.hpp"

#include <cmath>

#include "bivel/core/errors.hpp"

namespace bivel::core {

TransportCoefficients::TransportCoefficients(double mu, double kappa_m, double kappa_h,
                                             double kappa_klim, double temperature_exponent,
                                             double reference_temperature)
    : mu_(mu),
      eta_(2.0 * mu / 3.0), // fixed ratio: keeps the stress traceless
      kappa_m_(kappa_m),
      kappa_h_(kappa_h),
      kappa_klim_(kappa_klim),
      temperature_exponent_(temperature_exponent),
      reference_temperature_(reference_temperature) {
    if (!(mu >= 0.0) || !(kappa_m >= 0.0) || !(kappa_h >= 0.0) || !(kappa_klim >= 0.0)) {
        throw ValidationError("TransportCoefficients: coefficients must be non-negative");
    }
    if (!(reference_temperature > 0.0)) {
        throw ValidationError("TransportCoefficients: reference temperature must be positive");
    }
}

double TransportCoefficients::mu_at(double temperature) const {
    if (temperature_exponent_ == 0.0) {
        return mu_;
    }
    return mu_ * std::pow(temperature / reference_temperature_, temperature_exponent_);
}

double TransportCoefficients::eta_at(double temperature) const {
    return 2.0 * mu_at(temperature) / 3.0;
}

double TransportCoefficients::longitudinal_at(double temperature) const {
    return 2.0 * mu_at(temperature) - eta_at(temperature);
}

} // namespace bivel::core
