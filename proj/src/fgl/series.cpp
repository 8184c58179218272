#include "okc/fgl/series.hpp"

#include <sstream>
#include <stdexcept>

namespace okc {

std::vector<std::string> series_names(std::size_t r) {
    if (r == 1) return {"u"};
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= r; ++i) out.push_back("u" + std::to_string(i));
    return out;
}

TruncSeries::TruncSeries(Ring coeff_ring, std::vector<std::string> names, int trunc)
    : ring_(std::move(coeff_ring)), names_(std::move(names)), trunc_(trunc) {
    if (!ring_) throw std::invalid_argument("TruncSeries: null coefficient ring");
    if (trunc_ < 0) throw std::invalid_argument("TruncSeries: negative truncation degree");
}

TruncSeries TruncSeries::variable(Ring coeff_ring, std::vector<std::string> names, int trunc, std::size_t i) {
    if (i >= names.size()) throw std::out_of_range("TruncSeries::variable: index out of range");
    TruncSeries s(coeff_ring, std::move(names), trunc);
    s.add_term(Monomial::var(static_cast<int>(i)), SparsePoly::constant(coeff_ring, 1));
    return s;
}

TruncSeries TruncSeries::constant(Ring coeff_ring, std::vector<std::string> names, int trunc, const SparsePoly& c) {
    TruncSeries s(std::move(coeff_ring), std::move(names), trunc);
    s.add_term(Monomial{}, c);
    return s;
}

SparsePoly TruncSeries::coeff(const Monomial& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? SparsePoly(ring_) : it->second;
}

void TruncSeries::add_term(const Monomial& exps, const SparsePoly& c) {
    if (c.is_zero() || exps.total_degree() > trunc_) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void TruncSeries::check_compatible(const TruncSeries& o, const char* op) const {
    if (!same_ring(ring_, o.ring_) || names_ != o.names_ || trunc_ != o.trunc_) {
        throw std::invalid_argument(std::string(op) + ": incompatible series (ring, variables or truncation differ)");
    }
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    check_compatible(o, "series add");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    check_compatible(o, "series sub");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check_compatible(b, "series mul");
    TruncSeries r(a.ring_, a.names_, a.trunc_);
    for (const auto& [m1, c1] : a.terms_) {
        const int d1 = m1.total_degree();
        for (const auto& [m2, c2] : b.terms_) {
            if (d1 + m2.total_degree() > a.trunc_) continue;
            r.add_term(m1 * m2, c1 * c2);
        }
    }
    return r;
}

TruncSeries TruncSeries::scaled(const SparsePoly& c) const {
    TruncSeries r(ring_, names_, trunc_);
    for (const auto& [m, k] : terms_) r.add_term(m, k * c);
    return r;
}

TruncSeries TruncSeries::pow(unsigned k) const {
    TruncSeries result = constant(ring_, names_, trunc_, SparsePoly::constant(ring_, 1));
    for (unsigned i = 0; i < k; ++i) result = result * *this;
    return result;
}

TruncSeries TruncSeries::relabel(std::vector<std::string> names, const std::vector<int>& index_map) const {
    if (index_map.size() != names_.size()) throw std::invalid_argument("relabel: index map size mismatch");
    TruncSeries r(ring_, std::move(names), trunc_);
    for (const auto& [m, c] : terms_) {
        Monomial t;
        for (const auto& [v, e] : m.factors()) {
            int w = index_map[static_cast<std::size_t>(v)];
            if (w < 0 || static_cast<std::size_t>(w) >= r.names_.size()) {
                throw std::invalid_argument("relabel: target index out of range");
            }
            t = t * Monomial::var(w, e);
        }
        r.add_term(t, c);
    }
    return r;
}

TruncSeries TruncSeries::map_coefficients(Ring target, const std::function<SparsePoly(const SparsePoly&)>& f) const {
    TruncSeries r(std::move(target), names_, trunc_);
    for (const auto& [m, c] : terms_) {
        SparsePoly img = f(c);
        if (!same_ring(img.ring(), r.ring_)) throw std::invalid_argument("map_coefficients: image in wrong ring");
        r.add_term(m, img);
    }
    return r;
}

TruncSeries TruncSeries::truncated(int trunc) const {
    TruncSeries r(ring_, names_, trunc);
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    return r;
}

namespace {

std::string series_monomial(const Monomial& m, const std::vector<std::string>& names) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : m.factors()) {
        if (!first) os << '*';
        first = false;
        os << names.at(static_cast<std::size_t>(v));
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

}  // namespace

std::string TruncSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    std::map<Monomial, SparsePoly, DisplayOrder> ordered(terms_.begin(), terms_.end());
    bool first = true;
    for (const auto& [m, c] : ordered) {
        std::string body;
        bool negative = false;
        if (c.size() == 1) {
            const auto& [cm, k] = *c.terms().begin();
            negative = k < 0;
            BigInt a = negative ? BigInt(-k) : k;
            if (cm.is_one()) {
                if (a != 1 || m.is_one()) body = a.str();
            } else {
                body = (a != 1 ? a.str() + "*" : std::string()) + ring_->monomial_str(cm);
            }
        } else {
            body = "(" + c.str() + ")";
        }
        if (!m.is_one()) body += (body.empty() ? "" : "*") + series_monomial(m, names_);
        if (first) {
            os << (negative ? "-" : "") << body;
        } else {
            os << (negative ? " - " : " + ") << body;
        }
        first = false;
    }
    return os.str();
}

bool TruncSeries::operator==(const TruncSeries& o) const {
    return same_ring(ring_, o.ring_) && names_ == o.names_ && trunc_ == o.trunc_ && terms_ == o.terms_;
}

}  // namespace okc
