#include "daxcalc/ring.hpp"

#include "daxcalc/errors.hpp"

namespace daxcalc {

mpz_class RingElement::coefficient(const GroupElement& g) const
{
    auto it = terms_.find(g);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void RingElement::add_term(const GroupElement& g, const mpz_class& c)
{
    if (c == 0)
        return;
    if (g.is_identity())
        throw ValidationError("identity element has no term in Z[pi1 \\ 1]");
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void validate(const RingElement& x, const GroupSpec& spec)
{
    for (const auto& [g, c] : x.terms()) {
        if (g.is_identity())
            throw ValidationError("identity element has no term in Z[pi1 \\ 1]");
        validate(g, spec);
    }
}

RingElement add(const RingElement& x, const RingElement& y)
{
    RingElement out = x;
    for (const auto& [g, c] : y.terms())
        out.add_term(g, c);
    return out;
}

RingElement negate(const RingElement& x)
{
    RingElement out;
    for (const auto& [g, c] : x.terms())
        out.add_term(g, -c);
    return out;
}

RingElement subtract(const RingElement& x, const RingElement& y)
{
    return add(x, negate(y));
}

RingElement dax_sum(const GroupElement& g, int sign, const GroupSpec& spec)
{
    if (sign != 1 && sign != -1)
        throw ValidationError("sign must be +1 or -1");
    if (g.is_identity())
        throw ValidationError("dax sum of the identity is undefined");
    RingElement out;
    out.add_term(g, sign);
    out.add_term(inverse(g, spec), sign);
    return out;
}

RingElement monomial(const GroupElement& g, const mpz_class& c)
{
    RingElement out;
    out.add_term(g, c);
    return out;
}

std::string format_ring(const RingElement& x, const GroupSpec& spec)
{
    if (x.is_zero())
        return "0";
    std::string out;
    for (const auto& [g, c] : x.terms()) {
        const bool negative = c < 0;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        mpz_class mag = abs(c);
        if (mag != 1) {
            out += mag.get_str();
            out += '*';
        }
        out += format_word(g, spec);
    }
    return out;
}

} // namespace daxcalc
