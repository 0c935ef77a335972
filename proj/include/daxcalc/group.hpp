#pragma once

// Free products of cyclic groups and their reduced words.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace daxcalc {

struct Factor {
    std::string name;
    /// Order of the cyclic factor; empty for an infinite cyclic factor.
    std::optional<mpz_class> order;

    bool is_finite() const { return order.has_value(); }
    bool operator==(const Factor&) const = default;
};

/// An ordered free product of cyclic groups. The empty product is the
/// trivial group.
class GroupSpec {
public:
    GroupSpec() = default;
    explicit GroupSpec(std::vector<Factor> factors);

    static GroupSpec trivial() { return GroupSpec{}; }

    std::span<const Factor> factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }
    bool is_trivial() const { return factors_.empty(); }
    const Factor& factor(std::size_t index) const;
    std::optional<std::size_t> find(std::string_view name) const;

    bool operator==(const GroupSpec&) const = default;

private:
    std::vector<Factor> factors_;
};

bool is_identifier(std::string_view name);

struct Syllable {
    std::size_t factor;
    mpz_class exponent;

    bool operator==(const Syllable& other) const {
        return factor == other.factor && exponent == other.exponent;
    }
};

/// A reduced word. Adjacent syllables lie in distinct factors, exponents are
/// nonzero, and finite-factor exponents lie in [1, n-1]. The empty word is the
/// identity.
class GroupElement {
public:
    GroupElement() = default;

    /// Reduces an arbitrary syllable list under `spec`.
    static GroupElement from_syllables(std::span<const Syllable> syllables,
                                       const GroupSpec& spec);
    /// Single generator power x_i^e.
    static GroupElement generator(std::size_t factor, const mpz_class& exponent,
                                  const GroupSpec& spec);

    std::span<const Syllable> syllables() const { return syllables_; }
    std::size_t length() const { return syllables_.size(); }
    bool is_identity() const { return syllables_.empty(); }

    bool operator==(const GroupElement&) const = default;

private:
    std::vector<Syllable> syllables_;
};

/// Throws ValidationError unless `a` is a reduced word over `spec`.
void validate(const GroupElement& a, const GroupSpec& spec);
bool is_valid(const GroupElement& a, const GroupSpec& spec);

GroupElement multiply(const GroupElement& a, const GroupElement& b, const GroupSpec& spec);
GroupElement inverse(const GroupElement& a, const GroupSpec& spec);
bool is_two_torsion(const GroupElement& a, const GroupSpec& spec);

/// Total order: syllable count, then syllables lexicographically by
/// (factor, |exponent|, positive before negative).
std::strong_ordering compare_canonical(const GroupElement& a, const GroupElement& b);

struct CanonicalLess {
    bool operator()(const GroupElement& a, const GroupElement& b) const {
        return compare_canonical(a, b) < 0;
    }
};

/// Word in the shared text grammar: "1" or syllables joined by '*'.
std::string format_word(const GroupElement& a, const GroupSpec& spec);

} // namespace daxcalc
