#include "okc/model/proj.hpp"

#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace okc {

namespace {

std::vector<Variable> factor_vars(const MultiProj& p, const std::string& stem, int weight) {
    std::vector<Variable> vars;
    for (std::size_t i = 0; i < p.factors(); ++i) {
        std::string name = p.factors() == 1 ? stem : stem + std::to_string(i + 1);
        vars.push_back({name, weight, p.dim(i) + 1, false});
    }
    return vars;
}

std::vector<int> identity_map(std::size_t n) {
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 0);
    return m;
}

void require_space(const Ring& expected, const SparsePoly& v, const char* what) {
    if (!same_ring(expected, v.ring())) throw std::invalid_argument(std::string(what) + ": value over the wrong ring");
}

void require_same_space(const MultiProj& a, const MultiProj& b, const char* op) {
    if (!(a == b)) throw std::invalid_argument(std::string(op) + ": classes live on different spaces");
}

SparsePoly to_bm(const MultiProj& p, const SparsePoly& k) {
    return k.transport(bm_ring(p), identity_map(p.factors()));
}

}  // namespace

MultiProj::MultiProj(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw std::invalid_argument("MultiProj: need at least one factor");
    for (int d : dims_) {
        if (d < 0) throw std::invalid_argument("MultiProj: negative dimension");
        dim_ += d;
    }
}

std::string MultiProj::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < dims_.size(); ++i) os << (i ? " x " : "") << "P^" << dims_[i];
    return os.str();
}

Ring k_ring(const MultiProj& p) { return make_ring(factor_vars(p, "x", 0)); }

Ring bm_ring(const MultiProj& p) {
    auto vars = factor_vars(p, "x", 0);
    vars.push_back({"beta", 1, std::nullopt, true});
    return make_ring(std::move(vars));
}

Ring chow_ring(const MultiProj& p) { return make_ring(factor_vars(p, "h", 1)); }

KClass::KClass(MultiProj space) : space_(std::move(space)), value_(k_ring(space_)) {}

KClass::KClass(MultiProj space, SparsePoly value) : space_(std::move(space)), value_(std::move(value)) {
    require_space(k_ring(space_), value_, "KClass");
}

KClass KClass::monomial(const MultiProj& p, const std::vector<int>& exps, const BigInt& c) {
    if (exps.size() != p.factors()) throw std::invalid_argument("KClass::monomial: wrong number of exponents");
    return KClass(p, SparsePoly::monomial(k_ring(p), Monomial::from_dense(exps), c));
}

KClass operator+(const KClass& a, const KClass& b) {
    require_same_space(a.space_, b.space_, "KClass +");
    return KClass(a.space_, a.value_ + b.value_);
}

KClass operator-(const KClass& a, const KClass& b) {
    require_same_space(a.space_, b.space_, "KClass -");
    return KClass(a.space_, a.value_ - b.value_);
}

KClass operator*(const KClass& a, const KClass& b) {
    require_same_space(a.space_, b.space_, "KClass *");
    return KClass(a.space_, a.value_ * b.value_);
}

BMClass::BMClass(MultiProj space) : space_(std::move(space)), value_(bm_ring(space_)) {}

BMClass::BMClass(MultiProj space, SparsePoly value) : space_(std::move(space)), value_(std::move(value)) {
    require_space(bm_ring(space_), value_, "BMClass");
}

BMClass BMClass::from_k(const KClass& k, int beta_exp) {
    const MultiProj& p = k.space();
    SparsePoly beta = SparsePoly::monomial(bm_ring(p), Monomial::var(static_cast<int>(p.factors()), beta_exp));
    return BMClass(p, to_bm(p, k.value()) * beta);
}

BMClass BMClass::fundamental(const MultiProj& p) { return from_k(KClass::one(p), p.dim()); }

std::map<int, KClass> BMClass::beta_terms() const {
    const int b = static_cast<int>(space_.factors());
    std::map<int, TermList> parts;
    for (const auto& [m, c] : value_.terms()) parts[m.exponent(b)].emplace_back(m.without(b), c);
    std::map<int, KClass> out;
    for (const auto& [e, t] : parts) out.emplace(e, KClass(space_, SparsePoly::from_terms(k_ring(space_), t)));
    return out;
}

BMClass BMClass::from_beta_terms(const MultiProj& p, const std::map<int, KClass>& terms) {
    BMClass out(p);
    for (const auto& [e, k] : terms) out = out + from_k(k, e);
    return out;
}

BMClass operator+(const BMClass& a, const BMClass& b) {
    require_same_space(a.space_, b.space_, "BMClass +");
    return BMClass(a.space_, a.value_ + b.value_);
}

BMClass operator-(const BMClass& a, const BMClass& b) {
    require_same_space(a.space_, b.space_, "BMClass -");
    return BMClass(a.space_, a.value_ - b.value_);
}

BMClass operator*(const KClass& k, const BMClass& a) {
    require_same_space(k.space(), a.space_, "KClass * BMClass");
    return BMClass(a.space_, to_bm(a.space_, k.value()) * a.value_);
}

BMClass BMClass::shifted(int k) const {
    SparsePoly beta = SparsePoly::monomial(value_.ring(), Monomial::var(static_cast<int>(space_.factors()), k));
    return BMClass(space_, value_ * beta);
}

std::string BMClass::str() const {
    auto terms = beta_terms();
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, k] = *it;
        std::string beta = e == 0 ? "" : e == 1 ? "beta" : "beta^" + std::to_string(e);
        const auto& kt = k.value().terms();
        bool negative = false;
        std::string body;
        if (kt.size() == 1) {
            const auto& [m, c] = *kt.begin();
            negative = c < 0;
            BigInt a = negative ? BigInt(-c) : c;
            std::string mono = m.is_one() ? "" : k.value().ring()->monomial_str(m);
            std::vector<std::string> parts;
            if (a != 1 || (beta.empty() && mono.empty())) parts.push_back(to_string(a));
            if (!beta.empty()) parts.push_back(beta);
            if (!mono.empty()) parts.push_back(mono);
            for (std::size_t i = 0; i < parts.size(); ++i) body += (i ? "*" : "") + parts[i];
        } else {
            body = beta.empty() ? k.str() : beta + "*(" + k.str() + ")";
            if (beta.empty() && !first) body = "(" + body + ")";
        }
        if (first) {
            os << (negative ? "-" : "") << body;
        } else {
            os << (negative ? " - " : " + ") << body;
        }
        first = false;
    }
    return os.str();
}

ChowClass::ChowClass(MultiProj space) : space_(std::move(space)), value_(chow_ring(space_)) {}

ChowClass::ChowClass(MultiProj space, SparsePoly value) : space_(std::move(space)), value_(std::move(value)) {
    require_space(chow_ring(space_), value_, "ChowClass");
}

ChowClass ChowClass::monomial(const MultiProj& p, const std::vector<int>& exps, const BigInt& c) {
    if (exps.size() != p.factors()) throw std::invalid_argument("ChowClass::monomial: wrong number of exponents");
    return ChowClass(p, SparsePoly::monomial(chow_ring(p), Monomial::from_dense(exps), c));
}

ChowClass ChowClass::hyperplane(const MultiProj& p, std::size_t i) {
    if (i >= p.factors()) throw std::out_of_range("ChowClass::hyperplane: no such factor");
    return ChowClass(p, SparsePoly::monomial(chow_ring(p), Monomial::var(static_cast<int>(i))));
}

ChowClass operator+(const ChowClass& a, const ChowClass& b) {
    require_same_space(a.space_, b.space_, "ChowClass +");
    return ChowClass(a.space_, a.value_ + b.value_);
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
    require_same_space(a.space_, b.space_, "ChowClass *");
    return ChowClass(a.space_, a.value_ * b.value_);
}

ConnectiveClass::ConnectiveClass(int level, KClass value) : level_(level), value_(std::move(value)) {
    for (const auto& [m, c] : value_.value().terms()) {
        if (stratum_dimension(value_.space(), m) > level_) {
            throw std::domain_error("ConnectiveClass: value is not in F_" + std::to_string(level_));
        }
    }
}

LinearEmbedding::LinearEmbedding(MultiProj ambient_, std::vector<int> codims_)
    : ambient(std::move(ambient_)), codims(std::move(codims_)) {
    if (codims.size() != ambient.factors()) throw std::invalid_argument("LinearEmbedding: wrong number of codimensions");
    for (std::size_t i = 0; i < codims.size(); ++i) {
        if (codims[i] < 0 || codims[i] > ambient.dim(i)) {
            throw std::invalid_argument("LinearEmbedding: codimension out of range");
        }
    }
}

MultiProj LinearEmbedding::sub() const {
    std::vector<int> d = ambient.dims();
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= codims[i];
    return MultiProj(d);
}

Projection::Projection(MultiProj source_, std::vector<std::size_t> factors_)
    : source(std::move(source_)), factors(std::move(factors_)) {
    if (factors.empty()) throw std::invalid_argument("Projection: empty target");
    std::set<std::size_t> seen;
    for (std::size_t f : factors) {
        if (f >= source.factors() || !seen.insert(f).second) {
            throw std::invalid_argument("Projection: bad factor index");
        }
    }
}

MultiProj Projection::target() const {
    std::vector<int> d;
    for (std::size_t f : factors) d.push_back(source.dim(f));
    return MultiProj(d);
}

KClass class_of_bundle(const MultiProj& p, const LineBundleSpec& l) {
    if (l.degrees.size() != p.factors()) throw std::invalid_argument("class_of_bundle: wrong number of degrees");
    Ring r = k_ring(p);
    SparsePoly out = SparsePoly::constant(r, 1);
    for (std::size_t i = 0; i < p.factors(); ++i) {
        const long a = l.degrees[i];
        if (a == 0) continue;
        SparsePoly base = SparsePoly::constant(r, 1) - SparsePoly::monomial(r, Monomial::var(static_cast<int>(i)));
        // [O(-1)] = 1 - x; [O(a)] = [O(-1)]^{-a}.
        if (a > 0) base = poly_invert_unit(base);
        out *= base.pow(static_cast<unsigned>(a > 0 ? a : -a));
    }
    return KClass(p, out);
}

KClass class_of_linear_stratum(const MultiProj& p, const std::vector<int>& codims) {
    if (codims.size() != p.factors()) throw std::invalid_argument("class_of_linear_stratum: wrong number of codimensions");
    for (std::size_t i = 0; i < codims.size(); ++i) {
        if (codims[i] < 0 || codims[i] > p.dim(i)) throw std::invalid_argument("class_of_linear_stratum: codimension out of range");
    }
    return KClass::monomial(p, codims);
}

BMClass chern_operator(const MultiProj& p, const LineBundleSpec& l, const BMClass& alpha) {
    require_same_space(p, alpha.space(), "chern_operator");
    LineBundleSpec dual{l.degrees};
    for (auto& a : dual.degrees) a = -a;
    KClass c = KClass::one(p) - class_of_bundle(p, dual);
    return (c * alpha).shifted(-1);
}

int stratum_dimension(const MultiProj& p, const Monomial& m) {
    int n = p.dim();
    for (const auto& [v, e] : m.factors()) n -= e;
    return n;
}

int filtration_level(const KClass& kappa) {
    if (kappa.is_zero()) throw std::domain_error("filtration_level: the zero class has no level");
    int level = -1;
    for (const auto& [m, c] : kappa.value().terms()) level = std::max(level, stratum_dimension(kappa.space(), m));
    return level;
}

std::vector<Monomial> connective_group(const MultiProj& p, int n) {
    std::vector<Monomial> out;
    std::vector<int> c(p.factors(), 0);
    // Odometer over all exponent vectors 0 <= c_i <= d_i.
    while (true) {
        Monomial m = Monomial::from_dense(c);
        if (stratum_dimension(p, m) <= n) out.push_back(m);
        std::size_t i = 0;
        while (i < c.size() && c[i] == p.dim(i)) c[i++] = 0;
        if (i == c.size()) break;
        ++c[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

ConnectiveClass beta_inclusion(const ConnectiveClass& c) { return ConnectiveClass(c.level() + 1, c.value()); }

ChowClass gr_map(const ConnectiveClass& c) {
    const MultiProj& p = c.space();
    TermList t;
    for (const auto& [m, k] : c.value().value().terms()) {
        if (stratum_dimension(p, m) == c.level()) t.emplace_back(m, k);
    }
    return ChowClass(p, SparsePoly::from_terms(chow_ring(p), t));
}

KClass pullback_projection(const Projection& f, const KClass& kappa) {
    require_same_space(f.target(), kappa.space(), "pullback_projection");
    std::vector<int> var_map;
    for (std::size_t k : f.factors) var_map.push_back(static_cast<int>(k));
    return KClass(f.source, kappa.value().transport(k_ring(f.source), var_map));
}

KClass pullback_linear(const LinearEmbedding& e, const KClass& kappa) {
    require_same_space(e.ambient, kappa.space(), "pullback_linear");
    MultiProj sub = e.sub();
    return KClass(sub, kappa.value().transport(k_ring(sub), identity_map(sub.factors())));
}

KClass pushforward_linear(const LinearEmbedding& e, const KClass& kappa) {
    MultiProj sub = e.sub();
    require_same_space(sub, kappa.space(), "pushforward_linear");
    KClass included(e.ambient, kappa.value().transport(k_ring(e.ambient), identity_map(sub.factors())));
    return class_of_linear_stratum(e.ambient, e.codims) * included;
}

}  // namespace okc
