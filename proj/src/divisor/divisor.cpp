#include "okc/divisor/divisor.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace okc {

namespace {

LineBundleSpec bundle(const std::vector<long>& a, long scale) {
    LineBundleSpec l{a};
    for (auto& x : l.degrees) x *= scale;
    return l;
}

// 1 - [O(-a)]
KClass hypersurface_class(const MultiProj& p, const std::vector<long>& a) {
    return KClass::one(p) - class_of_bundle(p, bundle(a, -1));
}

// Coefficients of the law live in Z or Z[beta]; send beta to the BM beta.
SparsePoly coefficient_to_bm(const MultiProj& p, const SparsePoly& c) {
    const auto& r = *c.ring();
    if (r.num_vars() > 1 || (r.num_vars() == 1 && r.var(0).name != "beta")) {
        throw std::invalid_argument("divisor_class: law coefficients must lie in Z or Z[beta]");
    }
    return c.transport(bm_ring(p), std::vector<int>{static_cast<int>(p.factors())});
}

ChowClass cycle_of(const SNCConfig& d) {
    const MultiProj& p = d.ambient();
    ChowClass out(p);
    for (const auto& c : d.components()) {
        for (std::size_t j = 0; j < p.factors(); ++j) {
            out = out + BigInt(c.multiplicity * c.multidegree[j]) * ChowClass::hyperplane(p, j);
        }
    }
    return out;
}

}  // namespace

SNCConfig::SNCConfig(MultiProj ambient, std::vector<DivisorComponent> components)
    : ambient_(std::move(ambient)), components_(std::move(components)) {
    for (const auto& c : components_) {
        if (c.multidegree.size() != ambient_.factors()) {
            throw std::invalid_argument("SNCConfig: multidegree length does not match the number of factors");
        }
        if (c.multiplicity < 1) throw std::invalid_argument("SNCConfig: multiplicities must be >= 1");
        bool nonzero = false;
        for (long a : c.multidegree) {
            if (a < 0) throw std::invalid_argument("SNCConfig: multidegree entries must be >= 0");
            nonzero = nonzero || a != 0;
        }
        if (!nonzero) throw std::invalid_argument("SNCConfig: zero multidegree");
    }
}

std::vector<std::string> SNCConfig::warnings() const {
    std::vector<std::string> w;
    if (static_cast<int>(components_.size()) > ambient_.dim()) {
        w.push_back("more components (" + std::to_string(components_.size()) + ") than the ambient dimension (" +
                    std::to_string(ambient_.dim()) + "); strata deeper than the dimension are empty");
    }
    return w;
}

SNCConfig SNCConfig::lowered(std::size_t i) const {
    auto comps = components_;
    if (i >= comps.size()) throw std::out_of_range("SNCConfig::lowered: no such component");
    if (--comps[i].multiplicity == 0) comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
    return SNCConfig(ambient_, comps);
}

SNCConfig SNCConfig::permuted(const std::vector<std::size_t>& order) const {
    if (order.size() != components_.size()) throw std::invalid_argument("SNCConfig::permuted: wrong length");
    std::vector<DivisorComponent> comps;
    std::set<std::size_t> seen;
    for (std::size_t k : order) {
        if (k >= components_.size() || !seen.insert(k).second) throw std::invalid_argument("SNCConfig::permuted: not a permutation");
        comps.push_back(components_[k]);
    }
    return SNCConfig(ambient_, comps);
}

std::string SNCConfig::str() const {
    std::ostringstream os;
    if (components_.empty()) os << "0";
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const auto& c = components_[i];
        if (i) os << " + ";
        if (c.multiplicity != 1) os << c.multiplicity << "*";
        os << "D(";
        for (std::size_t j = 0; j < c.multidegree.size(); ++j) os << (j ? "," : "") << c.multidegree[j];
        os << ")";
    }
    os << " on " << ambient_.str();
    return os.str();
}

KClass structure_sheaf_class(const SNCConfig& d) {
    const MultiProj& p = d.ambient();
    KClass prod = KClass::one(p);
    for (const auto& c : d.components()) prod = prod * class_of_bundle(p, bundle(c.multidegree, -c.multiplicity));
    return KClass::one(p) - prod;
}

KClass stratum_class(const SNCConfig& d, const IndexSet& subset) {
    const MultiProj& p = d.ambient();
    KClass out = KClass::one(p);
    for (int i : subset) {
        if (i < 0 || static_cast<std::size_t>(i) >= d.size()) throw std::out_of_range("stratum_class: index out of range");
        out = out * hypersurface_class(p, d.components()[static_cast<std::size_t>(i)].multidegree);
    }
    return out;
}

int divisor_truncation(const SNCConfig& d) {
    long total = 0, widest = 0;
    for (const auto& c : d.components()) {
        total += c.multiplicity;
        long norm = 0;
        for (long a : c.multidegree) norm += a;
        widest = std::max(widest, norm);
    }
    return static_cast<int>(std::max<long>(total * widest + 1, d.ambient().dim()));
}

DivisorClassResult divisor_class(const SNCConfig& d, const FormalGroupLaw& f) {
    const MultiProj& p = d.ambient();
    const int dim = p.dim();
    DivisorClassResult res{{}, BMClass(p), BMClass::from_k(structure_sheaf_class(d), dim - 1), false};
    if (d.size() == 0) {
        res.verified = res.total == res.expected;
        return res;
    }
    if (f.trunc() < dim) {
        throw std::domain_error("divisor_class: law truncated at " + std::to_string(f.trunc()) +
                                ", below the ambient dimension " + std::to_string(dim));
    }
    std::vector<int> mult;
    for (const auto& c : d.components()) mult.push_back(static_cast<int>(c.multiplicity));
    SupportDecomposition dec = support_decompose(multi_sum(f, mult));

    for (const auto& [subset, g] : dec.parts) {
        const int depth = static_cast<int>(subset.size());
        const BMClass base = BMClass::from_k(stratum_class(d, subset), dim - depth);
        // Operator monomials prod c~_1(O(a_i))^{e_i} applied to the stratum,
        // built up one factor at a time.
        std::map<Monomial, BMClass> applied;
        applied.emplace(Monomial{}, base);
        auto apply = [&](const Monomial& e, auto&& self) -> const BMClass& {
            if (auto it = applied.find(e); it != applied.end()) return it->second;
            const int v = e.factors().front().first;
            const BMClass& inner = self(e.divided_by(Monomial::var(v)), self);
            auto value = chern_operator(p, {d.components()[static_cast<std::size_t>(v)].multidegree}, inner);
            return applied.emplace(e, std::move(value)).first->second;
        };
        BMClass contribution(p);
        for (const auto& [e, coeff] : g.terms()) {
            // Every factor of the operator monomial and of [O_{D_I}] lies in
            // the ideal (x_1..x_s), whose (d+1)-st power is zero.
            if (e.total_degree() + depth > dim) continue;
            contribution = contribution + BMClass(p, coefficient_to_bm(p, coeff) * apply(e, apply).value());
        }
        res.total = res.total + contribution;
        res.contributions.emplace(subset, std::move(contribution));
    }
    res.verified = res.total == res.expected;
    return res;
}

DivisorClassResult verify_divclass(const SNCConfig& d) {
    return divisor_class(d, fgl_multiplicative(std::max(1, divisor_truncation(d))));
}

RecursionReport verify_recursion(const SNCConfig& d) {
    if (d.size() == 0) throw std::invalid_argument("verify_recursion: the zero divisor has no last component");
    const MultiProj& p = d.ambient();
    const std::size_t r = d.size() - 1;
    const SNCConfig rest = d.lowered(r);
    const FormalGroupLaw f = fgl_multiplicative(std::max(1, divisor_truncation(d)));
    const BMClass whole = divisor_class(d, f).total;
    const BMClass prev = divisor_class(rest, f).total;
    const BMClass last = BMClass::from_k(stratum_class(d, {static_cast<int>(r)}), p.dim() - 1);
    const BMClass cross = chern_operator(p, {d.components()[r].multidegree}, prev).shifted(1);
    RecursionReport rep{r, whole, prev + last - cross, false};
    rep.pass = rep.lhs == rep.rhs;
    return rep;
}

ChowDivisorReport chow_divisor_check(const SNCConfig& d) {
    const MultiProj& p = d.ambient();
    const int level = p.dim() - 1;
    ChowClass from_k = gr_map(ConnectiveClass(level, structure_sheaf_class(d)));
    ChowClass cycle = cycle_of(d);
    ChowClass additive(p);
    if (d.size() > 0) {
        auto terms = divisor_class(d, fgl_additive(std::max(1, p.dim()))).total.beta_terms();
        if (auto it = terms.find(level); it != terms.end()) additive = gr_map(ConnectiveClass(level, it->second));
    }
    ChowDivisorReport rep{from_k, cycle, additive, false};
    rep.pass = from_k == cycle && additive == cycle;
    return rep;
}

SNCConfig random_snc_config(SeededRng& rng, const SNCFamily& fam) {
    const auto s = static_cast<std::size_t>(rng.uniform(1, fam.max_factors));
    std::vector<int> dims(s);
    int total = 0;
    while (total == 0) {
        total = 0;
        for (auto& x : dims) total += x = static_cast<int>(rng.uniform(0, fam.max_dim));
    }
    const auto r = static_cast<std::size_t>(rng.uniform(1, fam.max_components));
    std::vector<DivisorComponent> comps(r);
    for (auto& c : comps) {
        c.multidegree.assign(s, 0);
        bool nonzero = false;
        while (!nonzero) {
            for (auto& a : c.multidegree) {
                a = rng.uniform(0, fam.max_degree_entry);
                nonzero = nonzero || a != 0;
            }
        }
        c.multiplicity = rng.uniform(1, fam.max_multiplicity);
    }
    return SNCConfig(MultiProj(dims), comps);
}

}  // namespace okc
