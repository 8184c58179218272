#include "doctest.h"

#include "okc/cli/cli.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = okc::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(OKC_FIXTURE_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("lazard") {
    auto r = run({"lazard", "--max-degree", "3", "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    std::vector<int> ranks;
    for (const auto& d : j["degrees"]) ranks.push_back(d["rank"]);
    CHECK(ranks == std::vector<int>{1, 1, 2, 3});
    auto one = run({"lazard", "--max-degree", "1", "--json"});
    CHECK(nlohmann::json::parse(one.out)["degrees"].size() == 2);
    CHECK(run({"lazard", "--max-degree", "0"}).code == 2);
    CHECK(run({"lazard", "--max-degree", "9"}).code == 2);
    CHECK(run({"lazard", "--max-degree", "x"}).code == 2);
    CHECK(run({"lazard", "--max-degree", "3"}).err.empty());
}

TEST_CASE("fgl") {
    auto ns = run({"fgl", "nseries", "--law", "mult", "-n", "3", "--trunc", "4"});
    CHECK(ns.code == 0);
    CHECK(ns.out.find("series: 3*u - 3*beta*u^2 + beta^2*u^3\n") != std::string::npos);
    auto ms = run({"fgl", "multisum", "--law", "add", "2", "3"});
    CHECK(ms.out.find("series: 2*u1 + 3*u2\n") != std::string::npos);
    auto dec = run({"fgl", "decompose", "--law", "mult", "1", "1", "--json"});
    REQUIRE(dec.code == 0);
    auto parts = nlohmann::json::parse(dec.out)["parts"];
    std::map<std::string, std::string> g;
    for (const auto& p : parts) g[p["subset"]] = p["G"];
    CHECK(g == std::map<std::string, std::string>{{"{1}", "1"}, {"{2}", "1"}, {"{1,2}", "-beta"}});
    auto uni = run({"fgl", "multisum", "--law", "universal", "--trunc", "3", "1", "1"});
    CHECK(uni.code == 0);
    CHECK(uni.out.find("a11*u1*u2") != std::string::npos);
    CHECK(run({"fgl", "nseries", "--law", "other", "-n", "2"}).code == 2);
    CHECK(run({"fgl", "multisum", "--law", "add", "--trunc", "0", "1"}).code == 2);
    CHECK(run({"fgl", "multisum", "--law", "add", "-1"}).code == 2);
    CHECK(run({"fgl"}).code == 2);
}

TEST_CASE("truncation caps and OKC_MAX_TRUNC") {
    CHECK(run({"fgl", "nseries", "--law", "add", "-n", "2", "--trunc", "20"}).code == 2);
    setenv("OKC_MAX_TRUNC", "24", 1);
    CHECK(run({"fgl", "nseries", "--law", "add", "-n", "2", "--trunc", "20"}).code == 0);
    setenv("OKC_MAX_TRUNC", "junk", 1);
    CHECK(run({"fgl", "nseries", "--law", "add", "-n", "2"}).code == 2);
    unsetenv("OKC_MAX_TRUNC");
}

TEST_CASE("divclass") {
    auto r = run({"divclass", "verify", "--config", fixture("two_h_p2.json"), "--json"});
    CHECK(r.code == 0);
    CHECK(r.out == slurp(fixture("two_h_p2_report.json")));
    CHECK(run({"divclass", "verify", "--config", fixture("p2xp1.json")}).code == 0);
    CHECK(run({"divclass", "verify", "--config", fixture("malformed.json")}).code == 2);
    CHECK(run({"divclass", "verify", "--config", fixture("zero_multidegree.json")}).code == 2);
    CHECK(run({"divclass", "verify", "--config", fixture("missing.json")}).code == 2);
    CHECK(run({"divclass", "verify"}).code == 2);
    CHECK(run({"divclass", "verify", "--trials", "0"}).code == 2);

    auto a = run({"divclass", "verify", "--trials", "20", "--seed", "42", "--json"});
    auto b = run({"divclass", "verify", "--trials", "20", "--seed", "42", "--json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["passed"] == 20);
    CHECK(run({"divclass", "verify", "--trials", "20", "--seed", "43", "--json"}).out != a.out);
}

TEST_CASE("compare") {
    auto conic = run({"compare", "fundclass", "--dims", "2", "--degrees", "2", "--json"});
    CHECK(conic.code == 0);
    CHECK(conic.out == slurp(fixture("conic_fundclass.json")));
    auto six = run({"compare", "fundclass", "--dims", "3", "--degrees", "2", "--degrees", "3"});
    CHECK(six.code == 0);
    CHECK(six.out.find("theta_plus: 6*h^2\n") != std::string::npos);
    auto curve = run({"compare", "fundclass", "--dims", "1,2", "--degrees", "2,3"});
    CHECK(curve.out.find("theta_plus: 2*h1 + 3*h2\n") != std::string::npos);
    CHECK(run({"compare", "fundclass", "--dims", "1", "--degrees", "1", "--degrees", "1"}).code == 2);
    CHECK(run({"compare", "fundclass", "--dims", "2", "--degrees", "1,1"}).code == 2);
    CHECK(run({"compare", "fundclass", "--dims", "2,x"}).code == 2);
    CHECK(run({"compare", "fundclass", "--dims", "2"}).code == 0);
}

TEST_CASE("usage") {
    CHECK(run({}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("lazard") != std::string::npos);
}
