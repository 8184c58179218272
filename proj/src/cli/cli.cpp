#include "okc/cli/cli.hpp"

#include "okc/io/json.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace okc::cli {

namespace {

using io::Json;

/// Thrown for input errors found after option parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int env_cap() {
    const char* s = std::getenv("OKC_MAX_TRUNC");
    if (!s || !*s) return 0;
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (*end != '\0' || v < 1 || v > 64) throw UsageError("OKC_MAX_TRUNC must be an integer in 1..64");
    return static_cast<int>(v);
}

int cap(int builtin) { return std::max(builtin, env_cap()); }

void emit(std::ostream& out, const Json& j, bool json) {
    if (json) out << j.dump(2) << "\n";
    else out << io::render_text(j);
}

std::vector<long> parse_ints(const std::string& s, const char* what) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::logic_error&) {
            throw UsageError(std::string("bad ") + what + " \"" + s + "\"");
        }
    }
    if (out.empty()) throw UsageError(std::string("empty ") + what);
    return out;
}

FormalGroupLaw law_named(const std::string& name, int trunc) {
    if (name == "mult") return fgl_multiplicative(trunc);
    if (name == "add") return fgl_additive(trunc);
    return lazard_truncation(trunc).universal_law();
}

int cmd_lazard(int n, bool json, std::ostream& out, std::ostream& err) {
    const int limit = cap(kMaxLazardDegree);
    if (n < 1 || n > limit) throw UsageError("--max-degree must lie in 1.." + std::to_string(limit));
    if (n > kLazardWarnAbove) err << "warning: degrees above " << kLazardWarnAbove << " are slow\n";
    emit(out, {{"max_degree", n}, {"degrees", io::lazard_json(lazard_truncation(n))}}, json);
    return kOk;
}

struct FglArgs {
    std::string law = "mult";
    int trunc = 4;
    int n = 1;
    std::vector<int> multiplicities;
    bool json = false;
};

int cmd_fgl(const std::string& what, const FglArgs& a, std::ostream& out) {
    const int limit = cap(a.law == "universal" ? kMaxLazardDegree : kMaxSeriesTrunc);
    if (a.trunc < 1 || a.trunc > limit) throw UsageError("--trunc must lie in 1.." + std::to_string(limit));
    const FormalGroupLaw f = law_named(a.law, a.trunc);
    Json j = {{"law", a.law}, {"trunc", a.trunc}};
    if (what == "nseries") {
        j["n"] = a.n;
        j["series"] = n_series(f, a.n).str();
    } else {
        if (a.multiplicities.empty()) throw UsageError("give at least one multiplicity");
        for (int m : a.multiplicities)
            if (m < 0) throw UsageError("multiplicities must be >= 0");
        const TruncSeries s = multi_sum(f, a.multiplicities);
        j["multiplicities"] = a.multiplicities;
        j["series"] = s.str();
        if (what == "decompose") {
            Json parts = Json::array();
            for (const auto& [subset, g] : support_decompose(s).parts) {
                parts.push_back({{"subset", index_set_str(subset)}, {"G", g.str()}});
            }
            j["parts"] = parts;
        }
    }
    emit(out, j, a.json);
    return kOk;
}

struct DivArgs {
    std::string config;
    std::optional<int> trials;
    std::uint64_t seed = 0;
    bool json = false;
};

int cmd_divclass(const DivArgs& a, std::ostream& out, std::ostream& err) {
    if (!a.config.empty()) {
        std::ifstream in(a.config);
        if (!in) throw UsageError("cannot read " + a.config);
        Json raw;
        try {
            raw = Json::parse(in);
        } catch (const Json::parse_error& e) {
            throw UsageError(a.config + ": " + e.what());
        }
        const SNCConfig d = io::snc_config_from_json(raw);
        for (const auto& w : d.warnings()) err << "warning: " << w << "\n";
        const DivisorClassResult res = verify_divclass(d);
        Json j = {{"mode", "config"}};
        if (d.size() == 0) {
            j["report"] = {{"config", d.str()}, {"total", res.total.str()}, {"expected", res.expected.str()},
                           {"verified", res.verified}};
            emit(out, j, a.json);
            return res.verified ? kOk : kIdentityFailed;
        }
        const RecursionReport rec = verify_recursion(d);
        j["report"] = io::divisor_report_json(d, res, rec);
        emit(out, j, a.json);
        return res.verified && rec.pass ? kOk : kIdentityFailed;
    }
    if (!a.trials) throw UsageError("divclass verify needs --config or --trials");
    if (*a.trials < 1 || *a.trials > 100000) throw UsageError("--trials must lie in 1..100000");
    SeededRng rng(a.seed);
    Json results = Json::array();
    int good = 0;
    for (int t = 0; t < *a.trials; ++t) {
        const SNCConfig d = random_snc_config(rng);
        const bool v = verify_divclass(d).verified;
        const bool r = verify_recursion(d).pass;
        good += v && r;
        results.push_back({{"config", d.str()}, {"verified", v}, {"recursion", r}});
    }
    emit(out,
         {{"mode", "random"},
          {"seed", a.seed},
          {"generator_version", kGeneratorVersion},
          {"trials", *a.trials},
          {"passed", good},
          {"results", results}},
         a.json);
    return good == *a.trials ? kOk : kIdentityFailed;
}

struct CompareArgs {
    std::string dims;
    std::vector<std::string> degrees;
    bool json = false;
};

int cmd_compare(const CompareArgs& a, std::ostream& out) {
    std::vector<int> dims;
    for (long x : parse_ints(a.dims, "--dims")) {
        if (x < 0 || x > 16) throw UsageError("--dims entries must lie in 0..16");
        dims.push_back(static_cast<int>(x));
    }
    std::vector<std::vector<long>> degs;
    for (const auto& s : a.degrees) degs.push_back(parse_ints(s, "--degrees"));
    const CompleteIntersection x(MultiProj(dims), degs);
    const FundamentalTriangleReport rep = verify_fundamental_triangle(x);
    emit(out, io::triangle_report_json(x, rep), a.json);
    return rep.pass ? kOk : kIdentityFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in connective K-theory of multiprojective spaces"};
    app.require_subcommand(1);

    int lazard_n = 6;
    bool lazard_json = false;
    auto* lazard = app.add_subcommand("lazard", "Ranks, torsion and bases of the truncated Lazard ring");
    lazard->add_option("--max-degree", lazard_n, "Highest degree computed (1..8)");
    lazard->add_flag("--json", lazard_json, "JSON output");

    FglArgs fa;
    auto* fgl = app.add_subcommand("fgl", "Formal group law series");
    fgl->require_subcommand(1);
    auto add_law = [&](CLI::App* c) {
        c->add_option("--law", fa.law, "mult, add or universal")->check(CLI::IsMember({"mult", "add", "universal"}));
        c->add_option("--trunc", fa.trunc, "Truncation order");
        c->add_flag("--json", fa.json, "JSON output");
    };
    auto* nseries = fgl->add_subcommand("nseries", "[n]_F u");
    add_law(nseries);
    nseries->add_option("-n", fa.n, "Multiplier")->required();
    auto* multisum = fgl->add_subcommand("multisum", "[n1]u1 +_F ... +_F [nr]ur");
    add_law(multisum);
    multisum->add_option("multiplicities", fa.multiplicities)->required();
    auto* decompose = fgl->add_subcommand("decompose", "Support decomposition of a multi-sum");
    add_law(decompose);
    decompose->add_option("multiplicities", fa.multiplicities)->required();

    DivArgs da;
    auto* divclass = app.add_subcommand("divclass", "SNC divisor classes");
    divclass->require_subcommand(1);
    auto* verify = divclass->add_subcommand("verify", "Check the divisor-class identity and its recursion");
    auto* cfg = verify->add_option("--config", da.config, "JSON divisor configuration");
    auto* trials = verify->add_option("--trials", da.trials, "Number of random configurations");
    verify->add_option("--seed", da.seed, "Seed for random configurations");
    verify->add_flag("--json", da.json, "JSON output");
    cfg->excludes(trials);

    CompareArgs ca;
    auto* compare = app.add_subcommand("compare", "Fundamental classes of complete intersections");
    compare->require_subcommand(1);
    auto* fundclass = compare->add_subcommand("fundclass", "Both specializations of [X] and their oracles");
    fundclass->add_option("--dims", ca.dims, "Factor dimensions, comma separated")->required();
    fundclass->add_option("--degrees", ca.degrees, "One multidegree per hypersurface, comma separated");
    fundclass->add_flag("--json", ca.json, "JSON output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (lazard->parsed()) return cmd_lazard(lazard_n, lazard_json, out, err);
        if (fgl->parsed()) {
            for (auto* c : {nseries, multisum, decompose})
                if (c->parsed()) return cmd_fgl(c->get_name(), fa, out);
        }
        if (verify->parsed()) return cmd_divclass(da, out, err);
        if (fundclass->parsed()) return cmd_compare(ca, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace okc::cli
