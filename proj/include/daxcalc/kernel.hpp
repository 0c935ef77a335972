#pragma once

// The Dax kernel D(I0) and reduction of ring elements to canonical coset
// representatives in Z[pi1 \ 1] / D(I0).

#include <string_view>
#include <vector>

#include "daxcalc/group.hpp"
#include "daxcalc/ring.hpp"

namespace daxcalc {

enum class KernelKind {
    Trivial,      ///< zero kernel
    InversePairs, ///< spanned by w - w^-1 for every w
    ExplicitList, ///< Z-span of finitely many generators
};

struct KernelSpec {
    KernelKind kind = KernelKind::Trivial;
    std::vector<RingElement> generators; ///< ExplicitList only

    static KernelSpec trivial() { return {}; }
    static KernelSpec inverse_pairs() { return {KernelKind::InversePairs, {}}; }
    static KernelSpec explicit_list(std::vector<RingElement> gens)
    {
        return {KernelKind::ExplicitList, std::move(gens)};
    }

    bool operator==(const KernelSpec&) const = default;
};

std::string_view kernel_kind_name(KernelKind kind);

/// Throws ValidationError if a generator is zero or has a key outside `spec`.
void validate(const KernelSpec& k, const GroupSpec& spec);

/// Canonical coset representative of `x`. Idempotent, and x - reduce(x)
/// lies in the kernel.
RingElement reduce(const RingElement& x, const KernelSpec& k, const GroupSpec& spec);

bool equal_mod_kernel(const RingElement& x, const RingElement& y, const KernelSpec& k,
                      const GroupSpec& spec);

} // namespace daxcalc
