// dnawords -- command-line front end: generate, verify, minlen, bench
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parameter
// error, 3 I/O or parse error.

#include "dnawords/bench.hpp"
#include "dnawords/constraints.hpp"
#include "dnawords/errors.hpp"
#include "dnawords/expectation.hpp"
#include "dnawords/io.hpp"
#include "dnawords/length_planner.hpp"
#include "dnawords/transforms.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

using namespace dnawords;
using nlohmann::ordered_json;

namespace {

constexpr const char *tool_version = "1.0.0";

enum Exit { Ok = 0, Fail = 1, Usage = 2, Io = 3 };

/// Thrown for inconsistent flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// Flags shared by several subcommands.
struct Params
{
    std::optional<std::size_t> n;
    std::optional<std::size_t> k;
    std::array<std::optional<std::size_t>, 7> kp;
    std::optional<double> gamma;
    std::optional<std::size_t> d;
    std::optional<double> sigma;
    double delta = 1.0;

    std::optional<std::size_t> k_of(int p) const
    {
        if (kp[static_cast<std::size_t>(p)])
            return kp[static_cast<std::size_t>(p)];
        return k;
    }
};

void add_k_flags(CLI::App *app, Params &p)
{
    app->add_option("--k", p.k, "Set k1..k6 to one value");
    for (int i = 1; i <= 6; ++i)
        app->add_option("--k" + std::to_string(i),
                        p.kp[static_cast<std::size_t>(i)],
                        "Dissimilarity parameter k" + std::to_string(i) +
                            " (overrides --k)");
}

std::string timestamp()
{
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

ordered_json constraint_list(const std::bitset<10> &enabled)
{
    ordered_json out = ordered_json::array();
    for (int id = 1; id <= 9; ++id)
        if (enabled.test(static_cast<std::size_t>(id)))
            out.push_back("c" + std::to_string(id));
    return out;
}

std::bitset<10> parse_constraint_list(const std::string &text)
{
    std::bitset<10> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.size() == 2 && (item[0] == 'c' || item[0] == 'C') &&
            item[1] >= '1' && item[1] <= '9')
            out.set(static_cast<std::size_t>(item[1] - '0'));
        else
            throw UsageError("unknown constraint '" + item +
                             "' (expected c1..c9)");
    }
    return out;
}

void print_report(const Report &report, std::ostream &os)
{
    for (const auto &v : report.items)
        os << v.describe() << "\n";
    if (report.total > report.items.size())
        os << "... " << report.total - report.items.size()
           << " more violation(s) not shown\n";
}

// ---------------------------------------------------------------- generate

struct GenerateArgs
{
    Params p;
    std::string pipeline;
    bool min_length = false;
    bool hamming_only = false;
    bool optimize_d = false;
    bool no_timestamp = false;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string manifest;
};

int cmd_generate(const GenerateArgs &a)
{
    const Pipeline pipeline = parse_pipeline(a.pipeline);
    ConstraintSpec spec;
    for (int i = 1; i <= 6; ++i)
        spec.k[static_cast<std::size_t>(i)] = a.p.k_of(i).value_or(0);

    const bool uses_gamma = pipeline == Pipeline::C17 ||
                            pipeline == Pipeline::C12378 ||
                            pipeline == Pipeline::C18A ||
                            pipeline == Pipeline::C18B;
    const bool uses_d = pipeline == Pipeline::C12378 ||
                        pipeline == Pipeline::C18A ||
                        pipeline == Pipeline::C18B;
    if (uses_gamma && !a.p.gamma)
        throw UsageError("--gamma is required for pipeline " + a.pipeline);
    if (uses_d && !a.p.d)
        throw UsageError("--d is required for pipeline " + a.pipeline);
    if (!a.p.k_of(1) && !a.p.k_of(4))
        throw UsageError("give --k or --k1/--k4");
    spec.gamma = a.p.gamma.value_or(0.5);
    spec.d = a.p.d.value_or(2);

    GenerateOptions opt;
    opt.delta = a.p.delta;
    opt.use_min_length = a.min_length;
    opt.hamming_only = a.hamming_only;
    opt.optimize_d = a.optimize_d;

    const std::size_t n = *a.p.n;
    const GenerateResult r = generate(spec, n, pipeline, opt);

    ordered_json m;
    m["tool"] = "dnawords";
    m["version"] = tool_version;
    m["command"] = "generate";
    ordered_json params;
    params["pipeline"] = a.pipeline;
    params["n"] = n;
    for (int i = 1; i <= 6; ++i)
        params["k" + std::to_string(i)] = spec.k[static_cast<std::size_t>(i)];
    if (uses_gamma)
        params["gamma"] = spec.gamma;
    if (uses_d)
        params["d"] = spec.d;
    params["delta"] = opt.delta;
    params["min_length"] = opt.use_min_length;
    params["hamming_only"] = opt.hamming_only;
    params["optimize_d"] = opt.optimize_d;
    params["fill_order"] = "column-major";
    if (a.seed)
        params["seed"] = *a.seed; // recorded only; generation is deterministic
    m["parameters"] = params;

    ordered_json res;
    res["length"] = r.length;
    res["binary_length"] = r.binary_length;
    res["ell_star"] = r.plan.ell_star;
    res["c1"] = r.plan.c1;
    res["c2"] = r.plan.c2;
    if (opt.use_min_length) {
        const std::size_t k4 = pipeline == Pipeline::C14 ||
                                       pipeline == Pipeline::C16 ||
                                       pipeline == Pipeline::C17
                                   ? spec.k[4]
                                   : (opt.hamming_only ? 1 : spec.k[1]);
        ordered_json cert;
        cert["ell_min"] = r.binary_length;
        cert["feasible_at_ell_min"] =
            exceeds_threshold(n, r.binary_length, spec.k[1], k4);
        cert["feasible_below"] =
            r.binary_length > 1 &&
            exceeds_threshold(n, r.binary_length - 1, spec.k[1], k4);
        res["boundary_certificate"] = cert;
    }
    if (uses_d)
        res["d_used"] = r.d_used;
    res["alphabet"] = std::string(r.code.alphabet().name());
    res["words"] = r.code.size();
    m["result"] = res;

    ordered_json ver;
    ver["status"] = "passed";
    ver["constraints"] = constraint_list(r.verified.enabled);
    m["verification"] = ver;
    if (!a.no_timestamp)
        m["volatile"] = {{"timestamp", timestamp()}};

    const std::vector<std::string> comments = {
        "dnawords " + std::string(tool_version) + " " + a.pipeline + " n=" +
        std::to_string(n) + " length=" + std::to_string(r.length)};
    const std::string manifest_text = m.dump(2) + "\n";
    if (a.out.empty()) {
        std::cout << format_code(r.code, comments);
        if (!a.manifest.empty())
            write_text(a.manifest, manifest_text);
    } else {
        write_code(a.out, r.code, comments);
        write_text(a.manifest.empty() ? a.out + ".manifest.json" : a.manifest,
                   manifest_text);
        std::cerr << "wrote " << r.code.size() << " words of length "
                  << r.length << " to " << a.out << "\n";
    }
    return Ok;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs
{
    Params p;
    std::string input;
    std::string constraints;
    std::string energy_table;
    std::string manifest;
};

std::optional<double> json_number(const nlohmann::json &obj, const char *key)
{
    if (obj.contains(key) && obj[key].is_number())
        return obj[key].get<double>();
    return std::nullopt;
}

int cmd_verify(const VerifyArgs &a)
{
    const Code code = read_code(a.input);

    ConstraintSpec spec;
    std::array<bool, 7> have_k{};
    bool have_gamma = false, have_d = false, have_sigma = false;

    if (!a.manifest.empty()) {
        nlohmann::json m;
        try {
            m = nlohmann::json::parse(read_text(a.manifest));
        } catch (const nlohmann::json::parse_error &) {
            throw ParseError(a.manifest, 1, "invalid manifest JSON");
        }
        const auto &params = m.value("parameters", nlohmann::json::object());
        for (int i = 1; i <= 6; ++i) {
            const std::string key = "k" + std::to_string(i);
            if (auto v = json_number(params, key.c_str())) {
                spec.k[static_cast<std::size_t>(i)] =
                    static_cast<std::size_t>(*v);
                have_k[static_cast<std::size_t>(i)] = true;
            }
        }
        if (auto v = json_number(params, "gamma")) {
            spec.gamma = *v;
            have_gamma = true;
        }
        if (auto v = json_number(params, "d")) {
            spec.d = static_cast<std::size_t>(*v);
            have_d = true;
        }
        if (auto v = json_number(params, "sigma")) {
            spec.sigma = *v;
            have_sigma = true;
        }
        if (m.contains("verification") &&
            m["verification"].contains("constraints")) {
            std::string list;
            for (const auto &c : m["verification"]["constraints"])
                list += (list.empty() ? "" : ",") + c.get<std::string>();
            if (!list.empty())
                spec.enabled = parse_constraint_list(list);
        }
    }

    // explicit flags override the manifest
    for (int i = 1; i <= 6; ++i)
        if (auto v = a.p.k_of(i)) {
            spec.k[static_cast<std::size_t>(i)] = *v;
            have_k[static_cast<std::size_t>(i)] = true;
        }
    if (a.p.gamma) {
        spec.gamma = *a.p.gamma;
        have_gamma = true;
    }
    if (a.p.d) {
        spec.d = *a.p.d;
        have_d = true;
    }
    if (a.p.sigma) {
        spec.sigma = *a.p.sigma;
        have_sigma = true;
    }
    if (!a.constraints.empty())
        spec.enabled = parse_constraint_list(a.constraints);

    if (spec.enabled.none())
        throw UsageError("select constraints with --constraints or --manifest");
    for (int i = 1; i <= 6; ++i)
        if (spec.is_enabled(i) && !have_k[static_cast<std::size_t>(i)])
            throw UsageError("c" + std::to_string(i) + " needs --k" +
                             std::to_string(i) + " or --k");
    if (spec.is_enabled(7) && !have_gamma)
        throw UsageError("c7 needs --gamma");
    if (spec.is_enabled(8) && !have_d)
        throw UsageError("c8 needs --d");
    std::optional<EnergyTable> table;
    if (spec.is_enabled(9)) {
        if (a.energy_table.empty() || !have_sigma)
            throw UsageError("c9 needs --energy-table and --sigma");
        table = read_energy_table(a.energy_table);
    }

    const Report report =
        check_all(code, spec, table ? &*table : nullptr);
    const std::string list = constraint_list(spec.enabled).dump();
    if (report.empty()) {
        std::cout << "OK: " << code.size() << " words of length "
                  << code.length() << " satisfy " << list << "\n";
        return Ok;
    }
    print_report(report, std::cout);
    std::cout << "FAIL: " << report.total << " violation(s) of " << list
              << "\n";
    return Fail;
}

// ------------------------------------------------------------------ minlen

struct MinlenArgs
{
    Params p;
    bool hamming_only = false;
};

int cmd_minlen(const MinlenArgs &a)
{
    const std::size_t n = *a.p.n;
    const std::size_t k1 = a.p.k_of(1).value_or(0);
    if (a.hamming_only) {
        if (!a.p.k_of(1))
            throw UsageError("--hamming-only needs --k1");
        std::cout << "min=" << min_length_hamming_only(n, k1)
                  << ", ell_star=" << ell_star(n, k1, 1, a.p.delta) << "\n";
        return Ok;
    }
    if (!a.p.k_of(1) && !a.p.k_of(4))
        throw UsageError("give --k or --k1/--k4");
    const std::size_t k4 = a.p.k_of(4).value_or(0);
    std::cout << "min=" << min_length(n, k1, k4)
              << ", ell_star=" << ell_star(n, k1, k4, a.p.delta) << "\n";
    return Ok;
}

// ------------------------------------------------------------------- bench

struct BenchArgs
{
    std::string pipeline = "c1-4";
    std::vector<std::size_t> ns;
    std::vector<std::size_t> ks;
    double gamma = 0.5;
    std::size_t d = 3;
    std::size_t trials = 20;
    std::uint64_t seed = 1;
    double delta = 1.0;
    bool min_length = false;
    bool timing = false;
    std::string out;
};

int cmd_bench(const BenchArgs &a)
{
    BenchConfig cfg;
    cfg.pipeline = parse_pipeline(a.pipeline);
    cfg.ns = a.ns;
    cfg.ks = a.ks;
    cfg.gamma = a.gamma;
    cfg.d = a.d;
    cfg.trials = a.trials;
    cfg.seed = a.seed;
    cfg.options.delta = a.delta;
    cfg.options.use_min_length = a.min_length;

    const auto records = compare_lengths(cfg);
    const std::string table = format_bench_table(records, a.timing);

    ordered_json doc;
    doc["tool"] = "dnawords";
    doc["version"] = tool_version;
    doc["command"] = "bench";
    doc["baseline"] = "uniform rejection sampling";
    doc["parameters"] = {{"pipeline", a.pipeline}, {"ns", a.ns},
                         {"ks", a.ks},             {"gamma", a.gamma},
                         {"d", a.d},               {"trials", a.trials},
                         {"seed", a.seed},         {"delta", a.delta},
                         {"min_length", a.min_length}};
    ordered_json recs = ordered_json::array();
    for (const auto &r : records) {
        ordered_json j;
        j["pipeline"] = std::string(pipeline_name(r.pipeline));
        j["n"] = r.n;
        j["k"] = r.spec.k[1];
        j["deterministic_length"] = r.deterministic_length;
        if (r.baseline_length)
            j["baseline_length"] = *r.baseline_length;
        else
            j["baseline_length"] = "not found";
        j["trials"] = r.trials;
        j["seed"] = r.seed;
        if (a.timing)
            j["wall_seconds"] = r.wall_seconds;
        recs.push_back(j);
    }
    doc["records"] = recs;

    std::cout << table;
    if (!a.out.empty()) {
        write_text(a.out + ".txt", table);
        write_text(a.out + ".json", doc.dump(2) + "\n");
    }
    return Ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Deterministic construction and verification of "
                 "constrained binary and DNA codes"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);

    GenerateArgs gen;
    auto *g = app.add_subcommand("generate", "Construct and verify a code");
    g->add_option("--n", gen.p.n, "Number of words")->required();
    add_k_flags(g, gen.p);
    g->add_option("--gamma", gen.p.gamma, "GC fraction in [0,1]");
    g->add_option("--d", gen.p.d, "Longest allowed run");
    g->add_option("--delta", gen.p.delta, "c1 = 2 + delta for the length budget");
    g->add_option("--pipeline", gen.pipeline,
                  "c1-4, c1-6, c1-7, c12378, c1-8a or c1-8b")
        ->required();
    g->add_flag("--min-length", gen.min_length,
                "Use the smallest feasible length instead of ell*");
    g->add_flag("--hamming-only", gen.hamming_only,
                "C1-only derandomization (c12378, c1-8a, c1-8b)");
    g->add_flag("--optimize-d", gen.optimize_d,
                "c1-8b: use the run bound d' <= d giving the shortest words");
    g->add_option("--seed", gen.seed,
                  "Recorded in the manifest; generation is deterministic");
    g->add_option("--out", gen.out, "Code file (stdout if omitted)");
    g->add_option("--manifest", gen.manifest,
                  "Manifest path (default <out>.manifest.json)");
    g->add_flag("--no-timestamp", gen.no_timestamp,
                "Omit the volatile timestamp from the manifest");

    VerifyArgs ver;
    auto *v = app.add_subcommand("verify", "Check a code file against C1..C9");
    v->add_option("input", ver.input, "Code file")->required();
    add_k_flags(v, ver.p);
    v->add_option("--gamma", ver.p.gamma, "GC fraction for c7");
    v->add_option("--d", ver.p.d, "Longest allowed run for c8");
    v->add_option("--sigma", ver.p.sigma, "Free-energy tolerance for c9");
    v->add_option("--constraints", ver.constraints,
                  "Comma-separated list, e.g. c1,c4");
    v->add_option("--energy-table", ver.energy_table,
                  "JSON energy table for c9");
    v->add_option("--manifest", ver.manifest,
                  "Take parameters and constraints from a manifest");

    MinlenArgs ml;
    auto *mn = app.add_subcommand("minlen", "Smallest feasible length vs ell*");
    mn->add_option("--n", ml.p.n, "Number of words")->required();
    add_k_flags(mn, ml.p);
    mn->add_option("--delta", ml.p.delta, "c1 = 2 + delta");
    mn->add_flag("--hamming-only", ml.hamming_only, "C1-only potential");

    BenchArgs be;
    auto *b = app.add_subcommand("bench",
                                 "Compare deterministic lengths with a "
                                 "rejection-sampling baseline");
    b->add_option("--pipeline", be.pipeline, "Pipeline (default c1-4)");
    b->add_option("--ns", be.ns, "Word counts, e.g. 4,8")
        ->delimiter(',')
        ->required();
    b->add_option("--ks", be.ks, "k values (uniform k1..k6), e.g. 1,2")
        ->delimiter(',')
        ->required();
    b->add_option("--gamma", be.gamma, "GC fraction");
    b->add_option("--d", be.d, "Longest allowed run");
    b->add_option("--trials", be.trials, "Samples per length");
    b->add_option("--seed", be.seed, "Base seed");
    b->add_option("--delta", be.delta, "c1 = 2 + delta");
    b->add_flag("--min-length", be.min_length, "Deterministic side uses min length");
    b->add_flag("--timing", be.timing, "Include wall time (not reproducible)");
    b->add_option("--out", be.out, "Write <out>.txt and <out>.json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? Ok : Usage;
    }

    try {
        if (*g)
            return cmd_generate(gen);
        if (*v)
            return cmd_verify(ver);
        if (*mn)
            return cmd_minlen(ml);
        if (*b)
            return cmd_bench(be);
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return Usage;
    } catch (const VerificationFailed &e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return Fail;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return Io;
    } catch (const IoError &e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return Io;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    }
    return Usage;
}
