#include "daxcalc/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

#include "daxcalc/errors.hpp"
#include "daxcalc/presets.hpp"

namespace daxcalc {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_name_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space()
    {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                text_[pos_] == '\r'))
            ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    std::size_t pos() const { return pos_; }
    void advance() { ++pos_; }

    bool accept(char c)
    {
        skip_space();
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    std::string digits()
    {
        const std::size_t start = pos_;
        while (is_digit(peek()))
            ++pos_;
        if (pos_ == start)
            throw ParseError("expected digits", start);
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string_view name()
    {
        const std::size_t start = pos_;
        while (is_name_char(peek()))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        if (at_end())
            throw ParseError(what + ", found end of input", pos_);
        throw ParseError(what + ", found '" + std::string(1, text_[pos_]) + "'", pos_);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

Syllable parse_syllable(Cursor& c, const GroupSpec& spec)
{
    c.skip_space();
    const std::size_t start = c.pos();
    if (!std::isalpha(static_cast<unsigned char>(c.peek())))
        c.fail("expected factor name");
    const std::string_view name = c.name();
    const auto index = spec.find(name);
    if (!index)
        throw ParseError("unknown factor '" + std::string(name) + "'", start);
    mpz_class exponent = 1;
    if (c.accept('^')) {
        c.skip_space();
        bool negative = false;
        if (c.peek() == '-' || c.peek() == '+') {
            negative = c.peek() == '-';
            c.advance();
        }
        if (!is_digit(c.peek()))
            c.fail("malformed exponent: expected digits");
        exponent = mpz_class(c.digits());
        if (negative)
            exponent = -exponent;
    }
    return {*index, exponent};
}

// The "1" spelling of the identity, when it stands alone as a word.
bool at_identity_word(Cursor& c)
{
    c.skip_space();
    if (c.peek() != '1')
        return false;
    Cursor probe = c;
    probe.advance();
    return !is_name_char(probe.peek());
}

GroupElement parse_word_at(Cursor& c, const GroupSpec& spec)
{
    if (at_identity_word(c)) {
        c.advance();
        return {};
    }
    std::vector<Syllable> syllables{parse_syllable(c, spec)};
    while (c.accept('*'))
        syllables.push_back(parse_syllable(c, spec));
    return GroupElement::from_syllables(syllables, spec);
}

void expect_end(Cursor& c)
{
    c.skip_space();
    if (!c.at_end())
        c.fail("unexpected trailing input");
}

const Json& field(const Json& obj, const char* key, const std::string& path)
{
    if (!obj.is_object())
        throw ParseError(path + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(path + ": missing field '" + key + "'");
    return *it;
}

std::string string_at(const Json& j, const std::string& path)
{
    if (!j.is_string())
        throw ParseError(path + ": expected a string");
    return j.get<std::string>();
}

const Json& array_at(const Json& j, const std::string& path)
{
    if (!j.is_array())
        throw ParseError(path + ": expected an array");
    return j;
}

void reject_unknown(const Json& obj, std::initializer_list<std::string_view> allowed,
                    const std::string& path)
{
    for (const auto& [key, value] : obj.items())
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ParseError(path + ": unknown field '" + key + "'");
}

// Runs `f`, prefixing any error with the JSON field path.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

int sign_at(const Json& j, const std::string& path)
{
    if (!j.is_number_integer())
        throw ParseError(path + ": expected an integer sign");
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > 1)
        throw ValidationError(path + ": sign must be +1 or -1");
    const auto v = j.get<std::int64_t>();
    if (v != 1 && v != -1)
        throw ValidationError(path + ": sign must be +1 or -1");
    return static_cast<int>(v);
}

mpz_class order_at(const Json& j, const std::string& path)
{
    if (j.is_number_unsigned())
        return mpz_class(std::to_string(j.get<std::uint64_t>()));
    if (j.is_number_integer())
        return mpz_class(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.empty() || !std::all_of(s.begin(), s.end(), is_digit))
            throw ParseError(path + ": expected an integer order");
        return mpz_class(s);
    }
    throw ParseError(path + ": expected an integer order");
}

std::string signed_word(const SignedElement& s, const GroupSpec& spec)
{
    return (s.sign < 0 ? "-" : "+") + format_word(s.element, spec);
}

} // namespace

GroupElement parse_word(std::string_view text, const GroupSpec& spec)
{
    Cursor c(text);
    c.skip_space();
    if (c.at_end())
        throw ParseError("empty word", 0);
    GroupElement g = parse_word_at(c, spec);
    expect_end(c);
    return g;
}

RingElement parse_ringexpr(std::string_view text, const GroupSpec& spec)
{
    Cursor c(text);
    c.skip_space();
    if (c.at_end())
        throw ParseError("empty expression", 0);
    if (c.peek() == '0') {
        Cursor probe = c;
        probe.advance();
        probe.skip_space();
        if (probe.at_end())
            return {};
    }

    RingElement out;
    int sign = c.accept('-') ? -1 : 1;
    while (true) {
        c.skip_space();
        const std::size_t term_start = c.pos();
        mpz_class coefficient = 1;
        GroupElement word;
        if (is_digit(c.peek())) {
            const std::string digits = c.digits();
            if (c.accept('*')) {
                coefficient = mpz_class(digits);
                word = parse_word_at(c, spec);
            } else if (digits != "1") {
                c.fail("expected '*' after coefficient");
            }
        } else {
            word = parse_word_at(c, spec);
        }
        if (word.is_identity())
            throw ValidationError("identity term at position " + std::to_string(term_start) +
                                  ": Z[pi1 \\ 1] excludes the identity");
        out.add_term(word, sign * coefficient);

        c.skip_space();
        if (c.at_end())
            break;
        if (c.accept('+'))
            sign = 1;
        else if (c.accept('-'))
            sign = -1;
        else
            c.fail("expected '+' or '-'");
    }
    return out;
}

Json parse_json_text(std::string_view text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
}

GroupSpec group_from_json(const Json& j)
{
    const Json& factors = array_at(field(j, "factors", "group"), "group.factors");
    reject_unknown(j, {"factors"}, "group");
    std::vector<Factor> out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const std::string path = "group.factors[" + std::to_string(i) + "]";
        const Json& f = factors[i];
        const std::string type = string_at(field(f, "type", path), path + ".type");
        std::string name = string_at(field(f, "name", path), path + ".name");
        reject_unknown(f, {"type", "name", "n"}, path);
        if (type == "Z")
            out.push_back({std::move(name), std::nullopt});
        else if (type == "Zn")
            out.push_back({std::move(name), order_at(field(f, "n", path), path + ".n")});
        else
            throw ParseError(path + ".type: expected \"Z\" or \"Zn\"");
    }
    return at_path("group", [&] { return GroupSpec(std::move(out)); });
}

Json group_to_json(const GroupSpec& spec)
{
    Json factors = Json::array();
    for (const Factor& f : spec.factors()) {
        if (f.is_finite()) {
            Json n = f.order->fits_ulong_p() ? Json(f.order->get_ui()) : Json(f.order->get_str());
            factors.push_back({{"type", "Zn"}, {"name", f.name}, {"n", n}});
        } else {
            factors.push_back({{"type", "Z"}, {"name", f.name}});
        }
    }
    return {{"factors", factors}};
}

KernelSpec kernel_from_json(const Json& j, const GroupSpec& spec)
{
    if (!j.is_object())
        throw ParseError("dax_kernel: expected an object");
    reject_unknown(j, {"preset", "generators"}, "dax_kernel");
    if (j.contains("preset")) {
        const std::string id = string_at(j["preset"], "dax_kernel.preset");
        if (id == "trivial")
            return KernelSpec::trivial();
        if (id == "inverse_pairs")
            return KernelSpec::inverse_pairs();
        throw ValidationError("dax_kernel.preset: unknown kernel preset '" + id + "'");
    }
    const Json& gens = array_at(field(j, "generators", "dax_kernel"), "dax_kernel.generators");
    std::vector<RingElement> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string path = "dax_kernel.generators[" + std::to_string(i) + "]";
        const std::string text = string_at(gens[i], path);
        out.push_back(at_path(path, [&] { return parse_ringexpr(text, spec); }));
    }
    KernelSpec k = KernelSpec::explicit_list(std::move(out));
    validate(k, spec);
    return k;
}

Json kernel_to_json(const KernelSpec& k, const GroupSpec& spec)
{
    if (k.kind != KernelKind::ExplicitList)
        return {{"preset", std::string(kernel_kind_name(k.kind))}};
    Json gens = Json::array();
    for (const RingElement& g : k.generators)
        gens.push_back(format_ring(g, spec));
    return {{"generators", gens}};
}

ManifoldModel manifold_from_json(const Json& j)
{
    if (j.is_string())
        return instantiate(j.get<std::string>());
    if (!j.is_object())
        throw ParseError("manifold: expected a preset id or an object");
    if (j.contains("preset")) {
        reject_unknown(j, {"preset"}, "manifold");
        return instantiate(string_at(j["preset"], "manifold.preset"));
    }
    reject_unknown(j, {"group", "dax_kernel", "label"}, "manifold");
    ManifoldModel m;
    m.group = group_from_json(field(j, "group", "manifold"));
    if (j.contains("dax_kernel"))
        m.kernel = kernel_from_json(j["dax_kernel"], m.group);
    if (j.contains("label"))
        m.label = string_at(j["label"], "manifold.label");
    validate(m);
    return m;
}

Json manifold_to_json(const ManifoldModel& m)
{
    Json out{{"group", group_to_json(m.group)}, {"dax_kernel", kernel_to_json(m.kernel, m.group)}};
    if (!m.label.empty())
        out["label"] = m.label;
    return out;
}

SRData disc_from_json(const Json& j, const GroupSpec& spec)
{
    if (!j.is_object())
        throw ParseError("disc: expected an object");
    reject_unknown(j, {"double_tubes", "sr_discs"}, "disc");
    SRData d;
    if (j.contains("double_tubes")) {
        const Json& tubes = array_at(j["double_tubes"], "double_tubes");
        for (std::size_t i = 0; i < tubes.size(); ++i) {
            const std::string path = "double_tubes[" + std::to_string(i) + "]";
            const std::string text = string_at(tubes[i], path);
            d.double_tubes.push_back(at_path(path, [&] { return parse_word(text, spec); }));
        }
    }
    if (j.contains("sr_discs")) {
        const Json& discs = array_at(j["sr_discs"], "sr_discs");
        for (std::size_t i = 0; i < discs.size(); ++i) {
            const std::string path = "sr_discs[" + std::to_string(i) + "]";
            const int sign = sign_at(field(discs[i], "sign", path), path + ".sign");
            reject_unknown(discs[i], {"sign", "word"}, path);
            const std::string text = string_at(field(discs[i], "word", path), path + ".word");
            d.sr_discs.push_back(
                {sign, at_path(path + ".word", [&] { return parse_word(text, spec); })});
        }
    }
    return d;
}

Json disc_to_json(const SRData& d, const GroupSpec& spec)
{
    Json tubes = Json::array();
    for (const GroupElement& g : d.double_tubes)
        tubes.push_back(format_word(g, spec));
    Json discs = Json::array();
    for (const SignedElement& s : d.sr_discs)
        discs.push_back({{"sign", s.sign}, {"word", format_word(s.element, spec)}});
    return {{"double_tubes", tubes}, {"sr_discs", discs}};
}

std::string format_disc(const SRData& d, const GroupSpec& spec)
{
    std::string out = "double_tubes: [";
    for (std::size_t i = 0; i < d.double_tubes.size(); ++i)
        out += (i ? ", " : "") + format_word(d.double_tubes[i], spec);
    out += "] sr_discs: [";
    for (std::size_t i = 0; i < d.sr_discs.size(); ++i)
        out += (i ? ", " : "") + signed_word(d.sr_discs[i], spec);
    return out + "]";
}

DoublePointList double_points_from_json(const Json& j, const GroupSpec& spec)
{
    const Json& points = array_at(field(j, "points", "double points"), "points");
    reject_unknown(j, {"points"}, "double points");
    DoublePointList out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const std::string path = "points[" + std::to_string(i) + "]";
        const int sign = sign_at(field(points[i], "sign", path), path + ".sign");
        reject_unknown(points[i], {"sign", "word"}, path);
        const std::string text = string_at(field(points[i], "word", path), path + ".word");
        out.points.push_back(
            {sign, at_path(path + ".word", [&] { return parse_word(text, spec); })});
    }
    return out;
}

Json verdict_to_json(const Verdict& v, const GroupSpec& spec)
{
    return {{"outcome", std::string(outcome_name(v.outcome))},
            {"certificate", certificate_text(v, spec)},
            {"rule", std::string(rule_name(v.rule))}};
}

std::string format_verdict(const Verdict& v, const GroupSpec& spec)
{
    return std::string(outcome_name(v.outcome)) + "  certificate: " + certificate_text(v, spec);
}

SessionDocument session_from_json(const Json& j)
{
    if (!j.is_object())
        throw ParseError("session: expected an object");
    reject_unknown(j, {"manifold", "discs", "queries"}, "session");
    SessionDocument doc;
    doc.manifold = manifold_from_json(field(j, "manifold", "session"));
    const GroupSpec& spec = doc.manifold.group;

    if (j.contains("discs")) {
        const Json& discs = j["discs"];
        if (!discs.is_object())
            throw ParseError("discs: expected an object");
        for (const auto& [name, value] : discs.items())
            doc.discs.emplace(name, at_path("discs." + name,
                                            [&] { return disc_from_json(value, spec); }));
    }

    auto disc_name = [&](const Json& v, const std::string& path) {
        std::string name = string_at(v, path);
        if (!doc.discs.contains(name))
            throw ValidationError(path + ": undeclared disc '" + name + "'");
        return name;
    };

    const Json& queries = array_at(field(j, "queries", "session"), "queries");
    for (std::size_t i = 0; i < queries.size(); ++i) {
        const std::string path = "queries[" + std::to_string(i) + "]";
        const Json& q = queries[i];
        const std::string kind = string_at(field(q, "kind", path), path + ".kind");
        Query out{};
        if (kind == "invariant" || kind == "normalize") {
            out.kind = kind == "invariant" ? Query::Kind::Invariant : Query::Kind::Normalize;
            reject_unknown(q, {"kind", "disc"}, path);
            out.discs.push_back(disc_name(field(q, "disc", path), path + ".disc"));
        } else if (kind == "compare") {
            out.kind = Query::Kind::Compare;
            reject_unknown(q, {"kind", "discs"}, path);
            const Json& names = array_at(field(q, "discs", path), path + ".discs");
            if (names.size() != 2)
                throw ParseError(path + ".discs: expected exactly two disc names");
            for (std::size_t k = 0; k < 2; ++k)
                out.discs.push_back(
                    disc_name(names[k], path + ".discs[" + std::to_string(k) + "]"));
        } else if (kind == "reduce") {
            out.kind = Query::Kind::Reduce;
            reject_unknown(q, {"kind", "element"}, path);
            out.source = string_at(field(q, "element", path), path + ".element");
            out.element = at_path(path + ".element", [&] { return parse_ringexpr(out.source, spec); });
        } else if (kind == "pairing") {
            out.kind = Query::Kind::Pairing;
            reject_unknown(q, {"kind", "points"}, path);
            out.points = at_path(path, [&] {
                return double_points_from_json(Json{{"points", field(q, "points", path)}}, spec);
            });
        } else {
            throw ParseError(path + ".kind: unknown query kind '" + kind + "'");
        }
        doc.queries.push_back(std::move(out));
    }
    return doc;
}

namespace {

Json evaluate_query(const Query& q, const SessionDocument& doc)
{
    const ManifoldModel& m = doc.manifold;
    switch (q.kind) {
    case Query::Kind::Invariant:
        return {{"kind", "invariant"},
                {"disc", q.discs[0]},
                {"phi", format_ring(phi(doc.discs.at(q.discs[0]), m), m.group)}};
    case Query::Kind::Compare: {
        Json out = verdict_to_json(compare(doc.discs.at(q.discs[0]), doc.discs.at(q.discs[1]), m),
                                   m.group);
        out["kind"] = "compare";
        out["discs"] = q.discs;
        return out;
    }
    case Query::Kind::Reduce:
        return {{"kind", "reduce"},
                {"element", q.source},
                {"reduced", format_ring(reduce(q.element, m.kernel, m.group), m.group)}};
    case Query::Kind::Normalize:
        return {{"kind", "normalize"},
                {"disc", q.discs[0]},
                {"normalized", disc_to_json(normalize(doc.discs.at(q.discs[0]), m), m.group)}};
    case Query::Kind::Pairing: {
        PairingResult r = dax_value(q.points, m.group);
        return {{"kind", "pairing"},
                {"value", format_ring(r.value, m.group)},
                {"dropped", r.dropped}};
    }
    }
    return {};
}

} // namespace

Json run_session_json(const SessionDocument& doc)
{
    Json out = Json::array();
    for (const Query& q : doc.queries)
        out.push_back(evaluate_query(q, doc));
    return out;
}

std::vector<std::string> run_session_text(const SessionDocument& doc)
{
    std::vector<std::string> lines;
    const ManifoldModel& m = doc.manifold;
    for (const Query& q : doc.queries) {
        switch (q.kind) {
        case Query::Kind::Invariant:
            lines.push_back("invariant " + q.discs[0] + ": " +
                            format_ring(phi(doc.discs.at(q.discs[0]), m), m.group));
            break;
        case Query::Kind::Compare:
            lines.push_back("compare " + q.discs[0] + " " + q.discs[1] + ": " +
                            format_verdict(compare(doc.discs.at(q.discs[0]),
                                                   doc.discs.at(q.discs[1]), m),
                                           m.group));
            break;
        case Query::Kind::Reduce:
            lines.push_back("reduce " + q.source + ": " +
                            format_ring(reduce(q.element, m.kernel, m.group), m.group));
            break;
        case Query::Kind::Normalize:
            lines.push_back("normalize " + q.discs[0] + ": " +
                            format_disc(normalize(doc.discs.at(q.discs[0]), m), m.group));
            break;
        case Query::Kind::Pairing: {
            PairingResult r = dax_value(q.points, m.group);
            lines.push_back("pairing: " + format_ring(r.value, m.group) +
                            "  dropped: " + std::to_string(r.dropped));
            break;
        }
        }
    }
    return lines;
}

} // namespace daxcalc
