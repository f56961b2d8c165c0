/// @file variant.hpp
/// @brief The four model variants the solver can advance.

#pragma once

#include <optional>
#include <string>

namespace bivel::governing {

/// Model hierarchy, ordered from classical to full volume transport.
///
/// Degeneracy chain enforced by shared code paths:
///   klimontovich(kappa_klim = 0)  ==  nsf_baseline
///   bivelocity_reduced(kappa_m = 0)  ==  nsf_baseline
///   volume_full(kappa_m = 0, v_bar = 1/a_n)  ==  nsf_baseline (shared fields)
enum class ModelVariant {
    nsf_baseline,       ///< classical Navier-Stokes-Fourier
    bivelocity_reduced, ///< volume velocity in stress and its work, no independent v_bar
    volume_full,        ///< independent v_bar with volume production
    klimontovich,       ///< NSF plus Laplacian diffusion of mass, momentum, energy
};

std::string variant_name(ModelVariant variant);
std::optional<ModelVariant> variant_from_name(const std::string& name);

/// All four variants in hierarchy order, for sweeps over models.
inline constexpr ModelVariant all_variants[] = {
    ModelVariant::nsf_baseline,
    ModelVariant::bivelocity_reduced,
    ModelVariant::volume_full,
    ModelVariant::klimontovich,
};

/// True for the variants that carry an independently evolving v_bar field.
inline bool has_independent_volume(ModelVariant variant) {
    return variant == ModelVariant::volume_full;
}

} // namespace bivel::governing
