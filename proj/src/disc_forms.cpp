#include "daxcalc/disc_forms.hpp"

#include <algorithm>
#include <map>

#include "daxcalc/errors.hpp"

namespace daxcalc {

void validate(const ManifoldModel& m)
{
    validate(m.kernel, m.group);
}

std::vector<Violation> validate(const SRData& d, const ManifoldModel& m)
{
    std::vector<Violation> out;
    for (std::size_t i = 0; i < d.double_tubes.size(); ++i) {
        const std::string path = "double_tubes[" + std::to_string(i) + "]";
        const GroupElement& g = d.double_tubes[i];
        if (!is_valid(g, m.group))
            out.push_back({path, "not a reduced word over the group"});
        else if (!is_two_torsion(g, m.group))
            out.push_back({path, "double tube must be a nontrivial 2-torsion element"});
    }
    for (std::size_t j = 0; j < d.sr_discs.size(); ++j) {
        const std::string path = "sr_discs[" + std::to_string(j) + "]";
        const SignedElement& s = d.sr_discs[j];
        if (s.sign != 1 && s.sign != -1)
            out.push_back({path + ".sign", "sign must be +1 or -1"});
        if (!is_valid(s.element, m.group))
            out.push_back({path + ".word", "not a reduced word over the group"});
        else if (s.element.is_identity())
            out.push_back({path + ".word", "self-referential disc needs a nontrivial element"});
    }
    return out;
}

void require_valid(const SRData& d, const ManifoldModel& m)
{
    auto violations = validate(d, m);
    if (!violations.empty())
        throw ValidationError(violations.front().path + ": " + violations.front().message);
}

SRData concat(const SRData& d1, const SRData& d2)
{
    SRData out = d1;
    out.double_tubes.insert(out.double_tubes.end(), d2.double_tubes.begin(),
                            d2.double_tubes.end());
    out.sr_discs.insert(out.sr_discs.end(), d2.sr_discs.begin(), d2.sr_discs.end());
    return out;
}

SRData normalize(const SRData& d, const ManifoldModel& m)
{
    require_valid(d, m);

    std::map<GroupElement, long, CanonicalLess> tube_count;
    for (const GroupElement& g : d.double_tubes)
        ++tube_count[g];

    // Net signed multiplicity per element; opposite signs cancel pairwise.
    std::map<GroupElement, long, CanonicalLess> net;
    for (const SignedElement& s : d.sr_discs)
        net[s.element] += s.sign;

    SRData out;
    for (const auto& [g, n] : tube_count) {
        // Two double tubes along lambda are one +lambda self-referential disc.
        net[g] += n / 2;
        if (n % 2 == 1)
            out.double_tubes.push_back(g);
    }
    for (const auto& [g, n] : net) {
        const int sign = n > 0 ? 1 : -1;
        for (long i = 0; i < (n > 0 ? n : -n); ++i)
            out.sr_discs.push_back({sign, g});
    }
    return out;
}

SRData negate_data(const SRData& d)
{
    SRData out;
    out.double_tubes = d.double_tubes;
    for (const SignedElement& s : d.sr_discs)
        out.sr_discs.push_back({-s.sign, s.element});
    for (const GroupElement& g : d.double_tubes)
        out.sr_discs.push_back({-1, g});
    return out;
}

} // namespace daxcalc
