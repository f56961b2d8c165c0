#include "bivel/governing/variant.hpp"

namespace bivel::governing {

std::string variant_name(ModelVariant variant) {
    switch (variant) {
    case ModelVariant::nsf_baseline:
        return "nsf_baseline";
    case ModelVariant::bivelocity_reduced:
        return "bivelocity_reduced";
    case ModelVariant::volume_full:
        return "volume_full";
    case ModelVariant::klimontovich:
        return "klimontovich";
    }
    return "unknown";
}

std::optional<ModelVariant> variant_from_name(const std::string& name) {
    for (ModelVariant v : all_variants) {
        if (variant_name(v) == name) {
            return v;
        }
    }
    return std::nullopt;
}

} // namespace bivel::governing
