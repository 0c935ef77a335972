#include "daxcalc/pairing.hpp"

#include "daxcalc/errors.hpp"

namespace daxcalc {

namespace {

void check_sign(int sign, std::size_t i)
{
    if (sign != 1 && sign != -1)
        throw ValidationError("points[" + std::to_string(i) + "].sign: must be +1 or -1");
}

} // namespace

PairingResult dax_value(const DoublePointList& dp, const GroupSpec& spec)
{
    PairingResult out;
    for (std::size_t i = 0; i < dp.points.size(); ++i) {
        const DoublePoint& p = dp.points[i];
        check_sign(p.sign, i);
        validate(p.loop, spec);
        if (p.loop.is_identity()) {
            ++out.dropped;
            continue;
        }
        out.value.add_term(p.loop, p.sign);
    }
    return out;
}

RingElement spin_composition_value(const std::vector<DoublePoint>& spins, const GroupSpec& spec)
{
    RingElement out;
    for (std::size_t i = 0; i < spins.size(); ++i) {
        check_sign(spins[i].sign, i);
        validate(spins[i].loop, spec);
        if (spins[i].loop.is_identity())
            throw ValidationError("spins[" + std::to_string(i) +
                                  "]: spin along the identity is not a generator");
        out.add_term(spins[i].loop, spins[i].sign);
    }
    return out;
}

KernelSpec kernel_from_kernel_maps(const std::vector<DoublePointList>& maps,
                                   const GroupSpec& spec)
{
    std::vector<RingElement> gens;
    for (const DoublePointList& m : maps) {
        RingElement v = dax_value(m, spec).value;
        if (!v.is_zero())
            gens.push_back(std::move(v));
    }
    return KernelSpec::explicit_list(std::move(gens));
}

} // namespace daxcalc
