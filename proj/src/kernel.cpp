#include "daxcalc/kernel.hpp"

#include <set>

#include "daxcalc/errors.hpp"
#include "daxcalc/lattice.hpp"

namespace daxcalc {

namespace {

RingElement reduce_inverse_pairs(const RingElement& x, const GroupSpec& spec)
{
    RingElement out;
    for (const auto& [w, c] : x.terms()) {
        GroupElement w_inv = inverse(w, spec);
        out.add_term(compare_canonical(w_inv, w) < 0 ? w_inv : w, c);
    }
    return out;
}

RingElement reduce_explicit(const RingElement& x, const std::vector<RingElement>& gens)
{
    std::set<GroupElement, CanonicalLess> support;
    for (const auto& [w, c] : x.terms())
        support.insert(w);
    for (const RingElement& g : gens)
        for (const auto& [w, c] : g.terms())
            support.insert(w);
    // Pivots go on the canonically largest keys first, so representatives
    // favour smaller keys (as with the inverse-pair fold).
    const std::vector<GroupElement> basis(support.rbegin(), support.rend());

    auto coordinates = [&](const RingElement& r) {
        IntVector v;
        v.reserve(basis.size());
        for (const GroupElement& w : basis)
            v.push_back(r.coefficient(w));
        return v;
    };

    std::vector<IntVector> columns;
    columns.reserve(gens.size());
    for (const RingElement& g : gens)
        columns.push_back(coordinates(g));
    const HermiteBasis hnf = column_hermite_form(std::move(columns), basis.size());
    const IntVector reduced = reduce_mod_lattice(coordinates(x), hnf);

    RingElement out;
    for (std::size_t i = 0; i < basis.size(); ++i)
        out.add_term(basis[i], reduced[i]);
    return out;
}

} // namespace

std::string_view kernel_kind_name(KernelKind kind)
{
    switch (kind) {
    case KernelKind::Trivial:
        return "trivial";
    case KernelKind::InversePairs:
        return "inverse_pairs";
    case KernelKind::ExplicitList:
        return "explicit";
    }
    return "?";
}

void validate(const KernelSpec& k, const GroupSpec& spec)
{
    if (k.kind != KernelKind::ExplicitList) {
        if (!k.generators.empty())
            throw ValidationError("dax_kernel: generators given for a preset kernel");
        return;
    }
    for (std::size_t i = 0; i < k.generators.size(); ++i) {
        const std::string where = "dax_kernel.generators[" + std::to_string(i) + "]";
        if (k.generators[i].is_zero())
            throw ValidationError(where + ": zero generator");
        try {
            validate(k.generators[i], spec);
        } catch (const ValidationError& e) {
            throw ValidationError(where + ": " + e.what());
        }
    }
}

RingElement reduce(const RingElement& x, const KernelSpec& k, const GroupSpec& spec)
{
    validate(x, spec);
    validate(k, spec);
    switch (k.kind) {
    case KernelKind::Trivial:
        return x;
    case KernelKind::InversePairs:
        return reduce_inverse_pairs(x, spec);
    case KernelKind::ExplicitList:
        return reduce_explicit(x, k.generators);
    }
    return x;
}

bool equal_mod_kernel(const RingElement& x, const RingElement& y, const KernelSpec& k,
                      const GroupSpec& spec)
{
    return reduce(subtract(x, y), k, spec).is_zero();
}

} // namespace daxcalc
