#pragma once

// The invariant phi_{D0} and three-valued isotopy verdicts.

#include <string>
#include <string_view>

#include "daxcalc/disc_forms.hpp"
#include "daxcalc/ring.hpp"

namespace daxcalc {

enum class Outcome { Isotopic, NotIsotopic, Unknown };

std::string_view outcome_name(Outcome o);

enum class VerdictRule {
    TrivialFundamentalGroup, ///< pi1 = 1: homotopic discs are isotopic
    NormalForm,              ///< normalized data coincide
    PhiDifference,           ///< reduced phi difference is nonzero
    PhiEqual,                ///< phi agrees; the kernel of phi is unknown
};

std::string_view rule_name(VerdictRule r);

struct Verdict {
    Outcome outcome = Outcome::Unknown;
    VerdictRule rule = VerdictRule::PhiEqual;
    /// Reduced phi(d1) - phi(d2). Nonzero exactly for NotIsotopic.
    RingElement difference;
};

/// phi(d) reduced modulo the manifold's Dax kernel.
RingElement phi(const SRData& d, const ManifoldModel& m);

Verdict compare(const SRData& d1, const SRData& d2, const ManifoldModel& m);

/// Human-readable certificate: the difference for NotIsotopic, otherwise a
/// description of the rule that decided.
std::string certificate_text(const Verdict& v, const GroupSpec& spec);

} // namespace daxcalc
