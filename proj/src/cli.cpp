#include "daxcalc/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "daxcalc/errors.hpp"
#include "daxcalc/io.hpp"
#include "daxcalc/presets.hpp"

namespace daxcalc {

namespace {

struct Options {
    std::string preset;
    std::string manifold_file;
    std::vector<std::string> disc_files;
    std::vector<std::string> positional;
    std::string element;
    bool json = false;
    bool verbose = false;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Parses a file's JSON, tagging errors with the file name.
template <class F>
auto load(const std::string& path, F&& convert) -> decltype(convert(Json{}))
{
    const std::string text = read_file(path);
    try {
        return convert(parse_json_text(text));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

ManifoldModel resolve_manifold(const Options& o)
{
    if (!o.preset.empty() && !o.manifold_file.empty())
        throw ParseError("--preset and --manifold are mutually exclusive");
    if (!o.preset.empty())
        return instantiate(o.preset);
    if (!o.manifold_file.empty())
        return load(o.manifold_file, [](const Json& j) { return manifold_from_json(j); });
    throw ParseError("a manifold is required (--preset or --manifold)");
}

std::vector<std::string> disc_paths(const Options& o)
{
    std::vector<std::string> paths = o.disc_files;
    paths.insert(paths.end(), o.positional.begin(), o.positional.end());
    return paths;
}

std::vector<SRData> load_discs(const Options& o, const ManifoldModel& m)
{
    std::vector<SRData> discs;
    for (const std::string& path : disc_paths(o))
        discs.push_back(load(path, [&](const Json& j) { return disc_from_json(j, m.group); }));
    return discs;
}

void emit_json(std::ostream& out, const Json& j)
{
    out << j.dump() << '\n';
}

void cmd_presets(const Options& o, std::ostream& out)
{
    if (o.json) {
        Json arr = Json::array();
        for (const PresetInfo& p : list_presets())
            arr.push_back({{"id", p.id},
                           {"description", p.description},
                           {"manifold", manifold_to_json(instantiate(p.id))}});
        emit_json(out, arr);
        return;
    }
    for (const PresetInfo& p : list_presets())
        out << p.id << "  " << p.description << '\n';
}

void cmd_invariant(const Options& o, std::ostream& out, std::ostream& err)
{
    const ManifoldModel m = resolve_manifold(o);
    const auto discs = load_discs(o, m);
    if (discs.empty())
        throw ParseError("invariant: at least one disc file is required");
    const auto paths = disc_paths(o);
    Json arr = Json::array();
    for (std::size_t i = 0; i < discs.size(); ++i) {
        const std::string value = format_ring(phi(discs[i], m), m.group);
        if (o.verbose)
            err << paths[i] << ": " << format_disc(normalize(discs[i], m), m.group) << '\n';
        if (o.json)
            arr.push_back({{"disc", paths[i]}, {"phi", value}});
        else
            out << value << '\n';
    }
    if (o.json)
        emit_json(out, arr);
}

void cmd_compare(const Options& o, std::ostream& out, std::ostream& err)
{
    const ManifoldModel m = resolve_manifold(o);
    const auto discs = load_discs(o, m);
    if (discs.size() != 2)
        throw ParseError("compare: exactly two disc files are required");
    const Verdict v = compare(discs[0], discs[1], m);
    if (o.verbose)
        err << "rule: " << rule_name(v.rule) << '\n';
    if (o.json)
        emit_json(out, verdict_to_json(v, m.group));
    else
        out << format_verdict(v, m.group) << '\n';
}

void cmd_reduce(const Options& o, std::ostream& out, std::ostream& err)
{
    const ManifoldModel m = resolve_manifold(o);
    if (o.element.empty())
        throw ParseError("reduce: --element is required");
    const RingElement x = parse_ringexpr(o.element, m.group);
    const std::string reduced = format_ring(reduce(x, m.kernel, m.group), m.group);
    if (o.verbose)
        err << "kernel: " << kernel_kind_name(m.kernel.kind) << '\n';
    if (o.json)
        emit_json(out, {{"element", format_ring(x, m.group)}, {"reduced", reduced}});
    else
        out << reduced << '\n';
}

void cmd_normalize(const Options& o, std::ostream& out)
{
    const ManifoldModel m = resolve_manifold(o);
    const auto discs = load_discs(o, m);
    if (discs.empty())
        throw ParseError("normalize: at least one disc file is required");
    for (const SRData& d : discs) {
        const SRData n = normalize(d, m);
        if (o.json)
            emit_json(out, disc_to_json(n, m.group));
        else
            out << format_disc(n, m.group) << '\n';
    }
}

void cmd_pairing(const Options& o, std::ostream& out)
{
    const ManifoldModel m = resolve_manifold(o);
    const auto paths = disc_paths(o);
    if (paths.empty())
        throw ParseError("pairing: at least one double-point file is required");
    for (const std::string& path : paths) {
        const DoublePointList dp =
            load(path, [&](const Json& j) { return double_points_from_json(j, m.group); });
        const PairingResult r = dax_value(dp, m.group);
        if (o.json)
            emit_json(out, {{"value", format_ring(r.value, m.group)}, {"dropped", r.dropped}});
        else
            out << format_ring(r.value, m.group) << "  dropped: " << r.dropped << '\n';
    }
}

void cmd_run(const Options& o, std::ostream& out)
{
    if (o.positional.size() != 1)
        throw ParseError("run: exactly one session file is required");
    const SessionDocument doc =
        load(o.positional[0], [](const Json& j) { return session_from_json(j); });
    if (o.json) {
        out << run_session_json(doc).dump(2) << '\n';
        return;
    }
    for (const std::string& line : run_session_text(doc))
        out << line << '\n';
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dax invariant calculator for discs with a common dual sphere", "daxcalc"};
    app.require_subcommand(1);
    Options o;

    auto add_manifold = [&](CLI::App* sub) {
        sub->add_option("--preset", o.preset, "Built-in manifold id");
        sub->add_option("--manifold", o.manifold_file, "Manifold JSON file");
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", o.json, "JSON output");
        sub->add_flag("--verbose", o.verbose, "Diagnostics on stderr");
    };

    auto* presets = app.add_subcommand("presets", "List built-in manifolds");
    add_common(presets);

    auto* invariant = app.add_subcommand("invariant", "Compute phi of disc data");
    auto* cmp = app.add_subcommand("compare", "Compare two discs");
    auto* normalize_cmd = app.add_subcommand("normalize", "Normal form of disc data");
    auto* pairing = app.add_subcommand("pairing", "Dax sum of double-point lists");
    for (CLI::App* sub : {invariant, cmp, normalize_cmd, pairing}) {
        add_manifold(sub);
        add_common(sub);
        sub->add_option("--disc", o.disc_files, "Disc JSON file (repeatable)");
        sub->add_option("files", o.positional, "Input files");
    }

    auto* reduce_cmd = app.add_subcommand("reduce", "Reduce an element modulo the Dax kernel");
    add_manifold(reduce_cmd);
    add_common(reduce_cmd);
    reduce_cmd->add_option("--element", o.element, "Ring expression");

    auto* run = app.add_subcommand("run", "Evaluate a session document");
    add_common(run);
    run->add_option("session", o.positional, "Session JSON file");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParseError;
    }

    try {
        if (presets->parsed())
            cmd_presets(o, out);
        else if (invariant->parsed())
            cmd_invariant(o, out, err);
        else if (cmp->parsed())
            cmd_compare(o, out, err);
        else if (reduce_cmd->parsed())
            cmd_reduce(o, out, err);
        else if (normalize_cmd->parsed())
            cmd_normalize(o, out);
        else if (pairing->parsed())
            cmd_pairing(o, out);
        else if (run->parsed())
            cmd_run(o, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParseError;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << '\n';
        return kExitValidationError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidationError;
    }
    return kExitOk;
}

} // namespace daxcalc
