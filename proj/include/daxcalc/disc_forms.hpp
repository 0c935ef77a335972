#pragma once

// Self-referential-form data of a disc relative to a base disc D0, its
// addition, and its move-calculus normal form.

#include <string>
#include <vector>

#include "daxcalc/group.hpp"
#include "daxcalc/kernel.hpp"

namespace daxcalc {

/// Everything the algebra needs to know about (M, D0, G, I0).
struct ManifoldModel {
    GroupSpec group;
    KernelSpec kernel;
    std::string label;

    bool operator==(const ManifoldModel&) const = default;
};

/// Throws ValidationError if the kernel is not valid over the group.
void validate(const ManifoldModel& m);

struct SignedElement {
    int sign = 1;
    GroupElement element;

    bool operator==(const SignedElement&) const = default;
};

/// (lambda_1..lambda_n, sigma_1 g_1..sigma_k g_k). The empty data is D0.
struct SRData {
    std::vector<GroupElement> double_tubes;
    std::vector<SignedElement> sr_discs;

    bool empty() const { return double_tubes.empty() && sr_discs.empty(); }
    bool operator==(const SRData&) const = default;
};

struct Violation {
    std::string path; ///< e.g. "double_tubes[1]"
    std::string message;
};

/// All raw-data violations, in field order. Empty means valid.
std::vector<Violation> validate(const SRData& d, const ManifoldModel& m);
/// Throws ValidationError carrying the first violation.
void require_valid(const SRData& d, const ManifoldModel& m);

/// Sector-wise concatenation: the group law on isotopy classes.
SRData concat(const SRData& d1, const SRData& d2);

/// Applies the data moves to a fixed point: pairs of equal double tubes
/// become one +lambda self-referential disc, (s, g) cancels (-s, g), and both
/// lists are sorted canonically.
SRData normalize(const SRData& d, const ManifoldModel& m);

/// Data whose class is the inverse of d's: every sign flips, and a double
/// tube lambda becomes lambda together with (-1, lambda).
SRData negate_data(const SRData& d);

} // namespace daxcalc
