/// @file reference_scales.cpp
/// @brief Mean-free-path based reference scales for nondimensional studies.

#include "bivel/analysis/reference_scales.hpp"

#include <string>

#include "bivel/core/errors.hpp"

namespace bivel::analysis {

ReferenceScales ReferenceScales::from_knudsen(double knudsen, double length,
                                              double speed, double density,
                                              double temperature,
                                              double molecular_mass) {
  ReferenceScales s;
  s.mean_free_path = knudsen * length;
  s.macroscopic_length = length;
  s.molecular_speed = speed;
  s.density = density;
  s.temperature = temperature;
  s.molecular_mass = molecular_mass;
  s.validate();
  return s;
}

void ReferenceScales::validate() const {
  const struct {
    const char* name;
    double value;
  } entries[] = {
      {"mean_free_path", mean_free_path},
      {"macroscopic_length", macroscopic_length},
      {"molecular_speed", molecular_speed},
      {"density", density},
      {"temperature", temperature},
      {"molecular_mass", molecular_mass},
  };
  for (const auto& e : entries) {
    if (!(e.value > 0.0)) {
      throw core::ValidationError(std::string("reference scales: ") + e.name +
                                  " must be positive, got " +
                                  std::to_string(e.value));
    }
  }
}

}  // namespace bivel::analysis
