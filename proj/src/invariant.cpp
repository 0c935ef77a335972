#include "daxcalc/invariant.hpp"

namespace daxcalc {

std::string_view outcome_name(Outcome o)
{
    switch (o) {
    case Outcome::Isotopic:
        return "ISOTOPIC";
    case Outcome::NotIsotopic:
        return "NOT_ISOTOPIC";
    case Outcome::Unknown:
        return "UNKNOWN";
    }
    return "?";
}

std::string_view rule_name(VerdictRule r)
{
    switch (r) {
    case VerdictRule::TrivialFundamentalGroup:
        return "pi1-trivial";
    case VerdictRule::NormalForm:
        return "normal-form";
    case VerdictRule::PhiDifference:
        return "phi-difference";
    case VerdictRule::PhiEqual:
        return "phi-equal";
    }
    return "?";
}

RingElement phi(const SRData& d, const ManifoldModel& m)
{
    validate(m);
    require_valid(d, m);
    RingElement sum;
    for (const GroupElement& lambda : d.double_tubes)
        sum.add_term(lambda, 1);
    for (const SignedElement& s : d.sr_discs)
        sum = add(sum, dax_sum(s.element, s.sign, m.group));
    return reduce(sum, m.kernel, m.group);
}

Verdict compare(const SRData& d1, const SRData& d2, const ManifoldModel& m)
{
    validate(m);
    require_valid(d1, m);
    require_valid(d2, m);

    Verdict v;
    if (m.group.is_trivial()) {
        v.outcome = Outcome::Isotopic;
        v.rule = VerdictRule::TrivialFundamentalGroup;
        return v;
    }
    if (normalize(d1, m) == normalize(d2, m)) {
        v.outcome = Outcome::Isotopic;
        v.rule = VerdictRule::NormalForm;
        return v;
    }
    v.difference = reduce(subtract(phi(d1, m), phi(d2, m)), m.kernel, m.group);
    if (!v.difference.is_zero()) {
        v.outcome = Outcome::NotIsotopic;
        v.rule = VerdictRule::PhiDifference;
    } else {
        v.outcome = Outcome::Unknown;
        v.rule = VerdictRule::PhiEqual;
    }
    return v;
}

std::string certificate_text(const Verdict& v, const GroupSpec& spec)
{
    switch (v.rule) {
    case VerdictRule::TrivialFundamentalGroup:
        return "pi1 trivial";
    case VerdictRule::NormalForm:
        return "normal forms coincide";
    case VerdictRule::PhiDifference:
        return format_ring(v.difference, spec);
    case VerdictRule::PhiEqual:
        return "phi difference 0";
    }
    return {};
}

} // namespace daxcalc
