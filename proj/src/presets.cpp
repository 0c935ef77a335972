#include "daxcalc/presets.hpp"

#include "daxcalc/errors.hpp"

namespace daxcalc {

namespace {

GroupSpec infinite_cyclic()
{
    return GroupSpec({Factor{"t", std::nullopt}});
}

} // namespace

std::vector<PresetInfo> list_presets()
{
    return {
        {"boundary_connect_sum",
         "S2xD2 boundary-sum S1xB3: group Z<t>, kernel trivial"},
        {"connect_sum", "S2xD2 # S1xB3: group Z<t>, kernel inverse_pairs (t^i = t^-i)"},
        {"simply_connected", "simply connected: trivial group, kernel trivial"},
    };
}

ManifoldModel instantiate(std::string_view id)
{
    if (id == "boundary_connect_sum")
        return {infinite_cyclic(), KernelSpec::trivial(), "S2xD2 boundary-sum S1xB3"};
    if (id == "connect_sum")
        return {infinite_cyclic(), KernelSpec::inverse_pairs(), "S2xD2 # S1xB3"};
    if (id == "simply_connected")
        return {GroupSpec::trivial(), KernelSpec::trivial(), "simply connected"};
    throw ValidationError("unknown preset '" + std::string(id) + "'");
}

} // namespace daxcalc
