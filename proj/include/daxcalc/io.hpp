#pragma once

// Text grammars, JSON documents and canonical serialization.
//
//   word     := "1" | syllable ("*" syllable)*
//   syllable := name ("^" signed_int)?
//   ringexpr := "0" | ["-"] term (("+" | "-") term)*
//   term     := [unsigned_int "*"] word

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "daxcalc/disc_forms.hpp"
#include "daxcalc/group.hpp"
#include "daxcalc/invariant.hpp"
#include "daxcalc/kernel.hpp"
#include "daxcalc/pairing.hpp"
#include "daxcalc/ring.hpp"

namespace daxcalc {

using Json = nlohmann::json;

GroupElement parse_word(std::string_view text, const GroupSpec& spec);
RingElement parse_ringexpr(std::string_view text, const GroupSpec& spec);

GroupSpec group_from_json(const Json& j);
Json group_to_json(const GroupSpec& spec);
KernelSpec kernel_from_json(const Json& j, const GroupSpec& spec);
Json kernel_to_json(const KernelSpec& k, const GroupSpec& spec);
/// Accepts a preset id string, {"preset": id}, or {"group":..,"dax_kernel":..}.
ManifoldModel manifold_from_json(const Json& j);
Json manifold_to_json(const ManifoldModel& m);

SRData disc_from_json(const Json& j, const GroupSpec& spec);
Json disc_to_json(const SRData& d, const GroupSpec& spec);
/// e.g. "double_tubes: [a] sr_discs: [+t, -t^2]"
std::string format_disc(const SRData& d, const GroupSpec& spec);

DoublePointList double_points_from_json(const Json& j, const GroupSpec& spec);

Json verdict_to_json(const Verdict& v, const GroupSpec& spec);
/// "NOT_ISOTOPIC  certificate: t + t^-1"
std::string format_verdict(const Verdict& v, const GroupSpec& spec);

/// Parses JSON text, mapping syntax errors to ParseError.
Json parse_json_text(std::string_view text);

struct Query {
    enum class Kind { Invariant, Compare, Reduce, Normalize, Pairing };
    Kind kind;
    std::vector<std::string> discs; ///< referenced disc names
    RingElement element;            ///< Reduce
    DoublePointList points;         ///< Pairing
    std::string source;             ///< element text, for display
};

struct SessionDocument {
    ManifoldModel manifold;
    std::map<std::string, SRData> discs;
    std::vector<Query> queries;
};

SessionDocument session_from_json(const Json& j);

/// One result per query, in declaration order.
std::vector<std::string> run_session_text(const SessionDocument& doc);
Json run_session_json(const SessionDocument& doc);

} // namespace daxcalc
