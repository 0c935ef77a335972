#pragma once

// Double-point bookkeeping for loops of embedded arcs: the Dax sum of a
// combinatorially presented null homotopy, and of compositions of spin maps.

#include <cstddef>
#include <vector>

#include "daxcalc/group.hpp"
#include "daxcalc/kernel.hpp"
#include "daxcalc/ring.hpp"

namespace daxcalc {

struct DoublePoint {
    int sign = 1;
    GroupElement loop;

    bool operator==(const DoublePoint&) const = default;
};

struct DoublePointList {
    std::vector<DoublePoint> points;
};

struct PairingResult {
    RingElement value;
    std::size_t dropped = 0; ///< double points whose loop is trivial
};

/// Sum of sign * loop over the double points with nontrivial loop.
PairingResult dax_value(const DoublePointList& dp, const GroupSpec& spec);

/// Sum of sign_i * g_i for the composition of spin maps tau_{sign_i g_i}.
/// The identity is rejected.
RingElement spin_composition_value(const std::vector<DoublePoint>& spins, const GroupSpec& spec);

/// Explicit kernel spanned by the d3 values of the given kernel maps. Maps
/// evaluating to zero contribute no generator.
KernelSpec kernel_from_kernel_maps(const std::vector<DoublePointList>& maps,
                                   const GroupSpec& spec);

} // namespace daxcalc
