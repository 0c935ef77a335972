#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "daxcalc/disc_forms.hpp"

namespace daxcalc {

struct PresetInfo {
    std::string id;
    std::string description;
};

/// The built-in manifolds, in catalog order.
std::vector<PresetInfo> list_presets();

/// Throws ValidationError for an unknown id.
ManifoldModel instantiate(std::string_view id);

} // namespace daxcalc
