#include "bivel/core/gas_model.hpp"

#include <cmath>

#include "bivel/core/errors.hpp"

namespace bivel::core {

GasModel GasModel::monatomic(double molecular_mass, double gas_constant) {
    if (!(molecular_mass > 0.0)) {
        throw ValidationError("GasModel: molecular mass must be positive");
    }
    if (!(gas_constant > 0.0)) {
        throw ValidationError("GasModel: gas constant must be positive");
    }
    return GasModel{molecular_mass, gas_constant, 1.5 * gas_constant};
}

double GasModel::sound_speed(double temperature) const {
    return std::sqrt(gamma() * gas_constant * temperature);
}

} // namespace bivel::core
