#include "okc/compare/compare.hpp"

#include <sstream>
#include <stdexcept>

namespace okc {

CompleteIntersection::CompleteIntersection(MultiProj ambient, std::vector<std::vector<long>> degrees)
    : ambient_(std::move(ambient)), degrees_(std::move(degrees)) {
    if (static_cast<int>(degrees_.size()) > ambient_.dim()) {
        throw std::invalid_argument("CompleteIntersection: more hypersurfaces than the ambient dimension");
    }
    for (const auto& b : degrees_) {
        if (b.size() != ambient_.factors()) throw std::invalid_argument("CompleteIntersection: multidegree of the wrong length");
        bool nonzero = false;
        for (long x : b) {
            if (x < 0) throw std::invalid_argument("CompleteIntersection: negative multidegree");
            nonzero = nonzero || x != 0;
        }
        if (!nonzero) throw std::invalid_argument("CompleteIntersection: zero multidegree");
    }
}

KClass CompleteIntersection::structure_sheaf() const {
    KClass out = KClass::one(ambient_);
    for (const auto& b : degrees_) {
        LineBundleSpec dual{b};
        for (auto& x : dual.degrees) x = -x;
        out = out * (KClass::one(ambient_) - class_of_bundle(ambient_, dual));
    }
    return out;
}

std::string CompleteIntersection::str() const {
    std::ostringstream os;
    os << "CI(";
    for (std::size_t j = 0; j < degrees_.size(); ++j) {
        os << (j ? "; " : "");
        for (std::size_t i = 0; i < degrees_[j].size(); ++i) os << (i ? "," : "") << degrees_[j][i];
    }
    os << ") in " << ambient_.str();
    return os.str();
}

ConnectiveClass fundamental_class_CK(const CompleteIntersection& x) {
    // Each factor 1 - [O(-b)] lies in the ideal (x_1..x_s), so the product
    // of c of them lies in F_{d-c}; the constructor re-checks it.
    return ConnectiveClass(x.dim(), x.structure_sheaf());
}

BMClass theta_times(const ConnectiveClass& t) { return BMClass::from_k(t.value(), t.level()); }

ChowClass theta_plus(const ConnectiveClass& t) { return gr_map(t); }

ChowClass chow_oracle(const CompleteIntersection& x) {
    const MultiProj& p = x.ambient();
    ChowClass out = ChowClass::monomial(p, std::vector<int>(p.factors(), 0));
    for (const auto& b : x.degrees()) {
        ChowClass form(p);
        for (std::size_t i = 0; i < b.size(); ++i) form = form + BigInt(b[i]) * ChowClass::hyperplane(p, i);
        out = out * form;
    }
    return out;
}

FundamentalTriangleReport verify_fundamental_triangle(const CompleteIntersection& x) {
    ConnectiveClass ck = fundamental_class_CK(x);
    FundamentalTriangleReport rep{ck, theta_times(ck), theta_plus(ck), BMClass::from_k(x.structure_sheaf(), x.dim()),
                                  chow_oracle(x), false};
    rep.pass = rep.ch == rep.oracle && rep.g == rep.expected_g;
    return rep;
}

PullbackReport lci_pullback_check(const Projection& f, const CompleteIntersection& x) {
    if (!(f.target() == x.ambient())) throw std::invalid_argument("lci_pullback_check: X does not live on the target");
    std::vector<std::vector<long>> lifted;
    for (const auto& b : x.degrees()) {
        std::vector<long> l(f.source.factors(), 0);
        for (std::size_t k = 0; k < f.factors.size(); ++k) l[f.factors[k]] = b[k];
        lifted.push_back(l);
    }
    CompleteIntersection y(f.source, lifted);
    ConnectiveClass expected = fundamental_class_CK(y);
    ConnectiveClass pulled(y.dim(), pullback_projection(f, x.structure_sheaf()));
    PullbackReport rep{pulled, expected, false};
    rep.pass = pulled == expected;
    return rep;
}

PullbackReport lci_pullback_check(const LinearEmbedding& e, const CompleteIntersection& x) {
    if (!(e.ambient == x.ambient())) throw std::invalid_argument("lci_pullback_check: X does not live on the ambient space");
    MultiProj sub = e.sub();
    if (static_cast<int>(x.codim()) > sub.dim()) {
        throw std::domain_error("lci_pullback_check: restriction to " + sub.str() + " is not transverse");
    }
    CompleteIntersection y(sub, x.degrees());
    KClass pulled_value = pullback_linear(e, x.structure_sheaf());
    for (const auto& [m, c] : pulled_value.value().terms()) {
        if (stratum_dimension(sub, m) > y.dim()) {
            throw std::domain_error("lci_pullback_check: pulled-back class is not in F_" + std::to_string(y.dim()));
        }
    }
    ConnectiveClass expected = fundamental_class_CK(y);
    if (expected.value().is_zero()) {
        throw std::domain_error("lci_pullback_check: restriction to " + sub.str() + " is not transverse");
    }
    PullbackReport rep{ConnectiveClass(y.dim(), pulled_value), expected, false};
    rep.pass = rep.pulled == rep.expected;
    return rep;
}

TorFormulaReport tor_formula_check(const LinearEmbedding& e, const KClass& kappa) {
    if (!(e.ambient == kappa.space())) throw std::invalid_argument("tor_formula_check: class not on the ambient space");
    const MultiProj sub = e.sub();
    const Monomial normal = Monomial::from_dense(e.codims);
    TermList lambda_terms;
    for (const auto& [m, c] : kappa.value().terms()) {
        Monomial q = m.divided_by(normal);
        for (const auto& [v, x] : q.factors()) {
            if (x < 0) throw std::domain_error("tor_formula_check: class is not supported on " + sub.str());
        }
        lambda_terms.emplace_back(q, c);
    }
    // The quotient lives on the subspace; exponents there are capped by the
    // smaller dimensions, and anything capped away would not be a pushforward.
    SparsePoly lambda_poly = SparsePoly::from_terms(k_ring(sub), lambda_terms);
    KClass lambda(sub, lambda_poly);
    if (!(pushforward_linear(e, lambda) == kappa)) {
        throw std::domain_error("tor_formula_check: class is not a pushforward from " + sub.str());
    }
    KClass restricted = pullback_linear(e, kappa);
    KClass formula = pullback_linear(e, class_of_linear_stratum(e.ambient, e.codims)) * lambda;
    TorFormulaReport rep{restricted, formula, pushforward_linear(e, restricted), pushforward_linear(e, formula), false};
    rep.pass = restricted == formula && rep.pushed_restricted == rep.pushed_formula &&
               rep.pushed_restricted == class_of_linear_stratum(e.ambient, e.codims) * kappa;
    return rep;
}

}  // namespace okc
