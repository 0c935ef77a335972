// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "daxcalc/cli.hpp"
#include "daxcalc/invariant.hpp"
#include "daxcalc/io.hpp"
#include "daxcalc/pairing.hpp"
#include "daxcalc/presets.hpp"
#include "support/lattice_oracle.hpp"
#include "support/random.hpp"

using namespace daxcalc;
namespace fs = std::filesystem;

namespace {

struct Result {
    bool pass;
    std::string detail;
};

SRData spin_disc(const GroupSpec& spec, long exponent)
{
    SRData d;
    d.sr_discs.push_back({1, GroupElement::generator(0, exponent, spec)});
    return d;
}

Result figure_two()
{
    const ManifoldModel m = instantiate("boundary_connect_sum");
    const SRData dt = spin_disc(m.group, 1);
    const RingElement value = phi(dt, m);
    const Verdict v = compare(dt, SRData{}, m);
    const bool ok = value == parse_ringexpr("t + t^-1", m.group) &&
                    v.outcome == Outcome::NotIsotopic &&
                    format_ring(v.difference, m.group) == "t + t^-1";
    return {ok, "phi(D_t) = " + format_ring(value, m.group) + ", " + format_verdict(v, m.group)};
}

Result knotted_discs()
{
    const ManifoldModel m = instantiate("boundary_connect_sum");
    int pairs = 0, failures = 0;
    for (long i = 1; i <= 20; ++i)
        for (long j = i + 1; j <= 20; ++j) {
            ++pairs;
            if (compare(spin_disc(m.group, i), spin_disc(m.group, j), m).outcome !=
                Outcome::NotIsotopic)
                ++failures;
        }
    return {pairs == 190 && failures == 0,
            std::to_string(pairs) + " pairs, " + std::to_string(failures) + " not separated"};
}

Result connect_sum_relations()
{
    const ManifoldModel m = instantiate("connect_sum");
    int failures = 0;
    std::vector<RingElement> reduced;
    for (long i = 1; i <= 10; ++i) {
        const RingElement pos = monomial(GroupElement::generator(0, i, m.group), 1);
        const RingElement neg = monomial(GroupElement::generator(0, -i, m.group), 1);
        if (!equal_mod_kernel(pos, neg, m.kernel, m.group))
            ++failures;
        reduced.push_back(reduce(pos, m.kernel, m.group));
    }
    for (std::size_t i = 0; i < reduced.size(); ++i)
        for (std::size_t j = i + 1; j < reduced.size(); ++j)
            if (reduced[i] == reduced[j])
                ++failures;
    return {failures == 0, "t^i = t^-i for i=1..10, reductions pairwise distinct; failures " +
                               std::to_string(failures)};
}

Result open_question()
{
    const ManifoldModel m = instantiate("boundary_connect_sum");
    const Verdict v = compare(spin_disc(m.group, 1), spin_disc(m.group, -1), m);
    return {v.outcome == Outcome::Unknown, format_verdict(v, m.group)};
}

Result trivial_group()
{
    const ManifoldModel m = instantiate("simply_connected");
    testing::Rng rng(5);
    int failures = 0, valid = 0;
    // Candidate data over the trivial group: only the empty data validates.
    std::vector<SRData> candidates{SRData{}};
    for (int i = 0; i < 20; ++i) {
        SRData d;
        if (testing::coin(rng))
            d.double_tubes.push_back(GroupElement{});
        if (testing::coin(rng))
            d.sr_discs.push_back({testing::random_sign(rng), GroupElement{}});
        candidates.push_back(d);
    }
    for (const SRData& a : candidates)
        for (const SRData& b : candidates) {
            if (!validate(a, m).empty() || !validate(b, m).empty())
                continue;
            ++valid;
            if (compare(a, b, m).outcome != Outcome::Isotopic)
                ++failures;
        }
    return {failures == 0 && valid > 0,
            std::to_string(valid) + " valid pairs compared, " + std::to_string(failures) +
                " not ISOTOPIC"};
}

Result double_tube_identity()
{
    const ManifoldModel m{GroupSpec({{"t", std::nullopt}, {"a", mpz_class(2)}}),
                          KernelSpec::trivial(), "Z * Z/2"};
    const GroupElement a = parse_word("a", m.group);
    SRData tubes;
    tubes.double_tubes = {a, a};
    SRData expected;
    expected.sr_discs = {{1, a}};
    const SRData n = normalize(tubes, m);
    const RingElement value = phi(tubes, m);
    const bool ok = n == expected && value == monomial(a, 2) && phi(n, m) == value;
    return {ok, "normalize([a,a]) = " + format_disc(n, m.group) +
                    ", phi = " + format_ring(value, m.group)};
}

Result homomorphism_properties()
{
    testing::Rng rng(7070);
    const int trials = 600;
    int failures = 0;
    for (int iter = 0; iter < trials; ++iter) {
        const GroupSpec s = testing::random_group_spec(rng, 3);
        const ManifoldModel m{s, testing::random_kernel(rng, s), "random"};
        const SRData a = testing::random_srdata(rng, s);
        const SRData b = testing::random_srdata(rng, s);
        if (!equal_mod_kernel(phi(concat(a, b), m), add(phi(a, m), phi(b, m)), m.kernel, s))
            ++failures;
        if (!equal_mod_kernel(phi(normalize(a, m), m), phi(a, m), m.kernel, s))
            ++failures;
    }
    return {failures == 0,
            std::to_string(trials) + " random cases, " + std::to_string(failures) + " failures"};
}

Result lattice_oracle()
{
    testing::Rng rng(8080);
    const int trials = 250;
    int disagreements = 0, members = 0;
    for (int iter = 0; iter < trials; ++iter) {
        const GroupSpec s = testing::random_group_spec(rng, 2);
        std::vector<GroupElement> pool;
        // Small groups (a lone Z/2) have fewer than six nontrivial elements.
        for (int attempt = 0; attempt < 200 && pool.size() < 6; ++attempt) {
            GroupElement g = testing::random_nontrivial(rng, s, 3);
            if (std::find(pool.begin(), pool.end(), g) == pool.end())
                pool.push_back(g);
        }
        auto random_vector = [&](int max_support, int lo, int hi) {
            RingElement r;
            std::vector<GroupElement> keys = pool;
            std::shuffle(keys.begin(), keys.end(), rng);
            const int n = testing::uniform(rng, 1, std::min<int>(max_support, int(keys.size())));
            for (int i = 0; i < n; ++i) {
                int c = 0;
                while (c == 0)
                    c = testing::uniform(rng, lo, hi);
                r.add_term(keys[i], c);
            }
            return r;
        };

        std::vector<RingElement> gens;
        const int k = testing::uniform(rng, 1, 3);
        for (int i = 0; i < k; ++i)
            gens.push_back(random_vector(5, -3, 3));
        const KernelSpec kernel = KernelSpec::explicit_list(gens);

        const RingElement x = random_vector(4, -4, 4);
        RingElement y = x;
        for (const RingElement& g : gens) {
            const int c = testing::uniform(rng, -3, 3);
            for (const auto& [w, e] : g.terms())
                y.add_term(w, c * e);
        }
        if (testing::coin(rng))
            y = add(y, random_vector(2, -2, 2));

        const bool fast = equal_mod_kernel(x, y, kernel, s);
        const bool slow = testing::in_lattice_brute_force(subtract(x, y), gens, 40);
        members += slow ? 1 : 0;
        if (fast != slow)
            ++disagreements;
    }
    return {disagreements == 0,
            std::to_string(trials) + " kernels (" + std::to_string(members) + " members), " +
                std::to_string(disagreements) + " disagreements"};
}

Result pairing_additivity()
{
    testing::Rng rng(9090);
    const int trials = 600;
    int failures = 0, identity_entries = 0;
    for (int iter = 0; iter < trials; ++iter) {
        const GroupSpec s = testing::random_group_spec(rng, 3);
        const DoublePointList a = testing::random_double_points(rng, s);
        const DoublePointList b = testing::random_double_points(rng, s);
        DoublePointList ab = a;
        ab.points.insert(ab.points.end(), b.points.begin(), b.points.end());
        const PairingResult ra = dax_value(a, s), rb = dax_value(b, s), rab = dax_value(ab, s);
        identity_entries += static_cast<int>(rab.dropped);
        if (rab.value != add(ra.value, rb.value) || rab.dropped != ra.dropped + rb.dropped)
            ++failures;
    }
    return {failures == 0 && identity_entries > 0,
            std::to_string(trials) + " list pairs (" + std::to_string(identity_entries) +
                " identity loops), " + std::to_string(failures) + " failures"};
}

std::string capture(const std::string& command)
{
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        return "<popen failed>";
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    pclose(pipe);
    return out;
}

std::string read_text(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Result cli_determinism_and_robustness()
{
    const std::string session = std::string(DAXCALC_TEST_DATA) + "/session.json";
    const std::string binary = DAXCALC_BINARY;
    bool identical = true;
    for (const char* mode : {"", " --json"}) {
        const std::string cmd = "'" + binary + "' run" + mode + " '" + session + "' 2>&1";
        const std::string first = capture(cmd);
        identical = identical && !first.empty() && first.find("error") == std::string::npos;
        for (int i = 0; i < 2; ++i)
            identical = identical && capture(cmd) == first;
    }

    // Malformed inputs: random bytes carrying an invalid 0xFF byte, truncated
    // documents, and documents with a word or factor name corrupted by '#'.
    const fs::path dir = fs::temp_directory_path() / ("daxcalc_fuzz_" + std::to_string(getpid()));
    fs::create_directories(dir);
    const std::string data = DAXCALC_TEST_DATA;
    const std::vector<std::string> seeds{read_text(data + "/session.json"),
                                         read_text(data + "/d_t.json"),
                                         read_text(data + "/z2_manifold.json"),
                                         read_text(data + "/points.json")};

    testing::Rng rng(1010);
    auto random_bytes = [&] {
        std::string s(testing::uniform(rng, 0, 40), '\0');
        for (char& c : s)
            c = static_cast<char>(testing::uniform(rng, 0, 255));
        s.insert(s.begin() + testing::uniform(rng, 0, int(s.size())), '\xff');
        return s;
    };
    auto malformed_document = [&]() -> std::string {
        switch (testing::uniform(rng, 0, 2)) {
        case 0:
            return random_bytes();
        case 1: {
            std::string s = seeds[testing::uniform(rng, 0, int(seeds.size()) - 1)];
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.pop_back();
            return s.substr(0, testing::uniform(rng, 0, int(s.size()) - 1));
        }
        default: {
            std::string s = seeds[testing::uniform(rng, 0, int(seeds.size()) - 1)];
            std::vector<std::size_t> word_chars;
            for (const std::string key : {"\"word\": \"", "\"name\": \""})
                for (std::size_t p = s.find(key); p != std::string::npos; p = s.find(key, p + 1))
                    word_chars.push_back(p + key.size());
            const std::size_t at = word_chars[testing::uniform(rng, 0, int(word_chars.size()) - 1)];
            s[at] = '#';
            return s;
        }
        }
    };

    const int trials = 1000;
    int bad_exits = 0;
    std::string example;
    for (int iter = 0; iter < trials; ++iter) {
        std::vector<std::string> args{"daxcalc"};
        const fs::path file = dir / ("input_" + std::to_string(iter) + ".json");
        const int kind = testing::uniform(rng, 0, 5);
        if (kind == 0) {
            std::string element = random_bytes();
            element.insert(element.begin() + testing::uniform(rng, 0, int(element.size())), '#');
            args.insert(args.end(), {"reduce", "--preset", "connect_sum", "--element", element});
        } else {
            std::ofstream(file, std::ios::binary) << malformed_document();
            const std::string f = file.string();
            switch (kind) {
            case 1:
                args.insert(args.end(), {"run", f});
                break;
            case 2:
                args.insert(args.end(), {"invariant", "--preset", "boundary_connect_sum", f});
                break;
            case 3:
                args.insert(args.end(), {"compare", "--manifold", f, data + "/d0.json",
                                         data + "/d0.json"});
                break;
            case 4:
                args.insert(args.end(), {"pairing", "--preset", "boundary_connect_sum", f});
                break;
            default:
                args.insert(args.end(), {"normalize", "--preset", "connect_sum", "--disc", f});
                break;
            }
        }
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        if (code != kExitParseError && code != kExitValidationError) {
            ++bad_exits;
            if (example.empty())
                example = " (first offender: " + args[1] + ", exit " + std::to_string(code) + ")";
        }
    }
    fs::remove_all(dir);

    return {identical && bad_exits == 0,
            std::string("3 runs ") + (identical ? "byte-identical" : "DIFFER") + "; " +
                std::to_string(trials) + " malformed inputs, " + std::to_string(bad_exits) +
                " exits outside {1,2}" + example};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
        {"1  D_t vs D_0 in boundary_connect_sum", figure_two},
        {"2  D_{t^i} pairwise not isotopic, 1<=i<j<=20", knotted_discs},
        {"3  connect_sum kernel relations and freeness", connect_sum_relations},
        {"4  D_t vs D_{t^-1} stays UNKNOWN", open_question},
        {"5  simply connected: valid data all ISOTOPIC", trivial_group},
        {"6  two double tubes equal one +a disc", double_tube_identity},
        {"7  phi homomorphism and move invariance", homomorphism_properties},
        {"8  HNF reduction vs brute-force lattice oracle", lattice_oracle},
        {"9  pairing additivity under concatenation", pairing_additivity},
        {"10 CLI determinism and robustness", cli_determinism_and_robustness},
    };

    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Result r{false, ""};
        try {
            r = run();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        failed += r.pass ? 0 : 1;
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << name << ": " << r.detail << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
