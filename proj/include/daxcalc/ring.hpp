#pragma once

// The additive group Z[G \ 1]: finitely supported integer combinations of
// nontrivial group elements.

#include <map>
#include <string>

#include <gmpxx.h>

#include "daxcalc/group.hpp"

namespace daxcalc {

class RingElement {
public:
    using Terms = std::map<GroupElement, mpz_class, CanonicalLess>;

    RingElement() = default;

    /// Coefficient of `g`, zero when absent.
    mpz_class coefficient(const GroupElement& g) const;
    /// Adds `c` to the coefficient of `g`. Throws ValidationError for the
    /// identity unless `c` is zero.
    void add_term(const GroupElement& g, const mpz_class& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    bool operator==(const RingElement&) const = default;

private:
    Terms terms_;
};

/// Throws ValidationError unless every key is a valid word over `spec`.
void validate(const RingElement& x, const GroupSpec& spec);

RingElement add(const RingElement& x, const RingElement& y);
RingElement negate(const RingElement& x);
RingElement subtract(const RingElement& x, const RingElement& y);

/// sign * (g + g^-1); for an involution this is sign * 2g.
RingElement dax_sum(const GroupElement& g, int sign, const GroupSpec& spec);
/// The single term c*g; zero when c is zero.
RingElement monomial(const GroupElement& g, const mpz_class& c);

/// Canonical text: keys in compare_canonical order, coefficient 1 implicit,
/// "0" for the zero element.
std::string format_ring(const RingElement& x, const GroupSpec& spec);

} // namespace daxcalc
