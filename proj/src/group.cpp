#include "daxcalc/group.hpp"

#include <algorithm>
#include <set>

#include "daxcalc/errors.hpp"

namespace daxcalc {

namespace {

// Representative of `e` in the factor's exponent range; zero means trivial.
mpz_class reduce_exponent(const mpz_class& e, const Factor& f)
{
    if (!f.is_finite())
        return e;
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), e.get_mpz_t(), f.order->get_mpz_t());
    return r;
}

// Appends `s` to a reduced stack, merging with the top syllable as needed.
// Each push compares against the new top, so merges cascade.
void push_reduced(std::vector<Syllable>& stack, const Syllable& s, const GroupSpec& spec)
{
    const Factor& f = spec.factor(s.factor);
    mpz_class e = reduce_exponent(s.exponent, f);
    if (e == 0)
        return;
    if (!stack.empty() && stack.back().factor == s.factor) {
        mpz_class merged = reduce_exponent(stack.back().exponent + e, f);
        if (merged == 0)
            stack.pop_back();
        else
            stack.back().exponent = std::move(merged);
        return;
    }
    stack.push_back({s.factor, std::move(e)});
}

} // namespace

bool is_identifier(std::string_view name)
{
    if (name.empty())
        return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(name.front()))
        return false;
    return std::all_of(name.begin(), name.end(),
                       [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

GroupSpec::GroupSpec(std::vector<Factor> factors) : factors_(std::move(factors))
{
    std::set<std::string, std::less<>> seen;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const Factor& f = factors_[i];
        if (!is_identifier(f.name))
            throw ValidationError("factors[" + std::to_string(i) + "]: invalid factor name '" +
                                  f.name + "'");
        if (!seen.insert(f.name).second)
            throw ValidationError("factors[" + std::to_string(i) + "]: duplicate factor name '" +
                                  f.name + "'");
        if (f.order && *f.order < 2)
            throw ValidationError("factors[" + std::to_string(i) + "]: order must be >= 2");
    }
}

const Factor& GroupSpec::factor(std::size_t index) const
{
    if (index >= factors_.size())
        throw ValidationError("factor index " + std::to_string(index) + " out of range");
    return factors_[index];
}

std::optional<std::size_t> GroupSpec::find(std::string_view name) const
{
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i].name == name)
            return i;
    return std::nullopt;
}

GroupElement GroupElement::from_syllables(std::span<const Syllable> syllables,
                                          const GroupSpec& spec)
{
    GroupElement out;
    for (const Syllable& s : syllables)
        push_reduced(out.syllables_, s, spec);
    return out;
}

GroupElement GroupElement::generator(std::size_t factor, const mpz_class& exponent,
                                     const GroupSpec& spec)
{
    const Syllable s{factor, exponent};
    return from_syllables(std::span<const Syllable>(&s, 1), spec);
}

void validate(const GroupElement& a, const GroupSpec& spec)
{
    auto syl = a.syllables();
    for (std::size_t i = 0; i < syl.size(); ++i) {
        const Factor& f = spec.factor(syl[i].factor);
        if (syl[i].exponent == 0)
            throw ValidationError("syllable " + std::to_string(i) + ": zero exponent");
        if (f.is_finite() && (syl[i].exponent < 1 || syl[i].exponent >= *f.order))
            throw ValidationError("syllable " + std::to_string(i) +
                                  ": exponent outside [1, n-1] for factor " + f.name);
        if (i > 0 && syl[i - 1].factor == syl[i].factor)
            throw ValidationError("syllable " + std::to_string(i) +
                                  ": adjacent syllables in the same factor");
    }
}

bool is_valid(const GroupElement& a, const GroupSpec& spec)
{
    try {
        validate(a, spec);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

GroupElement multiply(const GroupElement& a, const GroupElement& b, const GroupSpec& spec)
{
    validate(a, spec);
    validate(b, spec);
    std::vector<Syllable> word(a.syllables().begin(), a.syllables().end());
    word.insert(word.end(), b.syllables().begin(), b.syllables().end());
    return GroupElement::from_syllables(word, spec);
}

GroupElement inverse(const GroupElement& a, const GroupSpec& spec)
{
    validate(a, spec);
    std::vector<Syllable> word;
    word.reserve(a.length());
    for (auto it = a.syllables().rbegin(); it != a.syllables().rend(); ++it)
        word.push_back({it->factor, -it->exponent});
    return GroupElement::from_syllables(word, spec);
}

bool is_two_torsion(const GroupElement& a, const GroupSpec& spec)
{
    return !a.is_identity() && multiply(a, a, spec).is_identity();
}

std::strong_ordering compare_canonical(const GroupElement& a, const GroupElement& b)
{
    if (auto c = a.length() <=> b.length(); c != 0)
        return c;
    auto sa = a.syllables();
    auto sb = b.syllables();
    for (std::size_t i = 0; i < sa.size(); ++i) {
        if (auto c = sa[i].factor <=> sb[i].factor; c != 0)
            return c;
        int mag = mpz_cmpabs(sa[i].exponent.get_mpz_t(), sb[i].exponent.get_mpz_t());
        if (mag != 0)
            return mag < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        const bool neg_a = sgn(sa[i].exponent) < 0;
        const bool neg_b = sgn(sb[i].exponent) < 0;
        if (neg_a != neg_b)
            return neg_a ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::string format_word(const GroupElement& a, const GroupSpec& spec)
{
    if (a.is_identity())
        return "1";
    std::string out;
    for (const Syllable& s : a.syllables()) {
        if (!out.empty())
            out += '*';
        out += spec.factor(s.factor).name;
        if (s.exponent != 1) {
            out += '^';
            out += s.exponent.get_str();
        }
    }
    return out;
}

} // namespace daxcalc
