#include "okc/io/json.hpp"

#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace okc::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("json: " + what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) bad(std::string("expected an object holding \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing \"") + key + "\"");
    return *it;
}

long small_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<long>();
}

std::vector<long> int_list(const Json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array");
    std::vector<long> out;
    for (const auto& x : j) out.push_back(small_int(x, what));
    return out;
}

std::string exponent_key(const std::vector<int>& e) {
    std::string key;
    for (std::size_t i = 0; i < e.size(); ++i) key += (i ? "," : "") + std::to_string(e[i]);
    return key;
}

std::vector<int> parse_key(const std::string& key, std::size_t n) {
    std::vector<int> e;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 6) {
            bad("bad exponent key \"" + key + "\"");
        }
        e.push_back(std::stoi(part));
    }
    if (e.size() != n) bad("exponent key \"" + key + "\" needs " + std::to_string(n) + " entries");
    return e;
}

Json one_based(const IndexSet& s) {
    Json a = Json::array();
    for (int i : s) a.push_back(i + 1);
    return a;
}

void render(const Json& j, const std::string& path, std::ostringstream& os) {
    auto scalar_array = [](const Json& a) {
        for (const auto& x : a)
            if (x.is_structured()) return false;
        return true;
    };
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) render(v, path.empty() ? k : path + "." + k, os);
    } else if (j.is_array() && !scalar_array(j)) {
        for (std::size_t i = 0; i < j.size(); ++i) render(j[i], path + "[" + std::to_string(i) + "]", os);
    } else if (j.is_array()) {
        os << path << ": [";
        for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
        os << "]\n";
    } else {
        os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

Json bigint_json(const BigInt& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(c);
    }
    return c.str();
}

BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
            bad("\"" + s + "\" is not an integer");
        }
        return BigInt(s);
    }
    bad("expected an integer");
}

Json lazard_json(const LazardRing& l) {
    Json out = Json::array();
    for (const auto& d : l.degrees()) {
        Json monos = Json::array(), torsion = Json::array(), basis = Json::array();
        for (const auto& m : d.monomials) monos.push_back(SparsePoly::monomial(l.free_ring(), m).str());
        for (const auto& t : d.torsion) torsion.push_back(bigint_json(t));
        for (const auto& b : d.basis) basis.push_back(b.str());
        out.push_back({{"degree", d.homological()},
                       {"monomials", monos},
                       {"rank", d.rank},
                       {"torsion", torsion},
                       {"basis", basis}});
    }
    return out;
}

Json k_poly_json(const KClass& k) {
    Json out = Json::object();
    for (const auto& [m, c] : k.value().terms()) out[exponent_key(m.dense(k.space().factors()))] = bigint_json(c);
    return out;
}

KClass k_class_from_json(const MultiProj& p, const Json& j) {
    if (!j.is_object()) bad("poly must be an object");
    KClass out(p);
    for (const auto& [key, c] : j.items()) {
        auto e = parse_key(key, p.factors());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > p.dim(i)) bad("exponent " + std::to_string(e[i]) + " exceeds the dimension of factor " + std::to_string(i + 1));
        }
        out = out + KClass::monomial(p, e, bigint_from_json(c));
    }
    return out;
}

Json bm_class_json(const BMClass& a) {
    Json terms = Json::array();
    for (const auto& [e, k] : a.beta_terms()) terms.push_back({{"exp", e}, {"poly", k_poly_json(k)}});
    return {{"space", {{"dims", a.space().dims()}}}, {"beta_terms", terms}};
}

BMClass bm_class_from_json(const Json& j) {
    std::vector<int> dims;
    for (long x : int_list(field(field(j, "space"), "dims"), "dims")) {
        if (x < 0 || x > 64) bad("dimension out of range");
        dims.push_back(static_cast<int>(x));
    }
    MultiProj p(dims);
    const Json& terms = field(j, "beta_terms");
    if (!terms.is_array()) bad("beta_terms must be an array");
    std::map<int, KClass> by_exp;
    for (const auto& t : terms) {
        const long e = small_int(field(t, "exp"), "exp");
        if (e < std::numeric_limits<int>::min() / 2 || e > std::numeric_limits<int>::max() / 2) bad("exp out of range");
        KClass k = k_class_from_json(p, field(t, "poly"));
        auto [it, fresh] = by_exp.emplace(static_cast<int>(e), k);
        if (!fresh) it->second = it->second + k;
    }
    return BMClass::from_beta_terms(p, by_exp);
}

Json snc_config_json(const SNCConfig& d) {
    Json comps = Json::array();
    for (const auto& c : d.components()) comps.push_back({{"multidegree", c.multidegree}, {"multiplicity", c.multiplicity}});
    return {{"dims", d.ambient().dims()}, {"components", comps}};
}

SNCConfig snc_config_from_json(const Json& j) {
    std::vector<int> dims;
    for (long x : int_list(field(j, "dims"), "dims")) {
        if (x < 0 || x > 64) bad("dimension out of range");
        dims.push_back(static_cast<int>(x));
    }
    const Json& comps = field(j, "components");
    if (!comps.is_array()) bad("components must be an array");
    std::vector<DivisorComponent> out;
    for (const auto& c : comps) {
        DivisorComponent dc;
        dc.multidegree = int_list(field(c, "multidegree"), "multidegree");
        dc.multiplicity = c.contains("multiplicity") ? small_int(c["multiplicity"], "multiplicity") : 1;
        out.push_back(std::move(dc));
    }
    return SNCConfig(MultiProj(dims), out);
}

Json divisor_report_json(const SNCConfig& d, const DivisorClassResult& res, const RecursionReport& rec) {
    Json contributions = Json::array();
    for (const auto& [subset, c] : res.contributions) contributions.push_back({{"subset", one_based(subset)}, {"class", c.str()}});
    Json warnings = Json::array();
    for (const auto& w : d.warnings()) warnings.push_back(w);
    return {{"config", d.str()},
            {"warnings", warnings},
            {"contributions", contributions},
            {"total", res.total.str()},
            {"expected", res.expected.str()},
            {"verified", res.verified},
            {"recursion",
             {{"component", rec.component + 1}, {"lhs", rec.lhs.str()}, {"rhs", rec.rhs.str()}, {"pass", rec.pass}}},
            {"total_class", bm_class_json(res.total)}};
}

Json triangle_report_json(const CompleteIntersection& x, const FundamentalTriangleReport& rep) {
    return {{"variety", x.str()},
            {"dim", x.dim()},
            {"ck", {{"level", rep.ck.level()}, {"class", rep.ck.value().str()}}},
            {"theta_plus", rep.ch.str()},
            {"chow_oracle", rep.oracle.str()},
            {"theta_times", rep.g.str()},
            {"expected_theta_times", rep.expected_g.str()},
            {"verified", rep.pass}};
}

std::string render_text(const Json& j) {
    std::ostringstream os;
    render(j, "", os);
    return os.str();
}

}  // namespace okc::io
