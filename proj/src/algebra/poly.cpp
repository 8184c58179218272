#include "okc/algebra/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace okc {

void require_same_ring(const SparsePoly& p, const SparsePoly& q, const char* op) {
    if (!same_ring(p.ring(), q.ring())) {
        throw std::invalid_argument(std::string(op) + ": ring mismatch");
    }
}

SparsePoly::SparsePoly(Ring ring) : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("SparsePoly: null ring");
}

SparsePoly SparsePoly::constant(Ring ring, const BigInt& c) {
    return monomial(std::move(ring), Monomial{}, c);
}

SparsePoly SparsePoly::monomial(Ring ring, const Monomial& m, const BigInt& c) {
    SparsePoly p(std::move(ring));
    p.ring_->accumulate(p.terms_, m, c);
    p.settle();
    return p;
}

SparsePoly SparsePoly::variable(Ring ring, std::string_view name, int exp) {
    int v = ring->index_of(name);
    return monomial(std::move(ring), Monomial::var(v, exp));
}

SparsePoly SparsePoly::from_terms(Ring ring, const TermList& terms) {
    SparsePoly p(std::move(ring));
    for (const auto& [m, c] : terms) p.ring_->accumulate(p.terms_, m, c);
    p.settle();
    return p;
}

BigInt SparsePoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    r.settle();
    return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& q) {
    require_same_ring(*this, q, "poly_add");
    // Both operands are normal, so their sum only needs cancellation (and
    // lattice reduction, in a presented quotient).
    for (const auto& [m, c] : q.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    settle();
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& q) {
    require_same_ring(*this, q, "poly_sub");
    for (const auto& [m, c] : q.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    settle();
    return *this;
}

SparsePoly operator*(const SparsePoly& p, const SparsePoly& q) {
    require_same_ring(p, q, "poly_mul");
    SparsePoly r(p.ring_);
    const auto& ring = *p.ring_;
    for (const auto& [m1, c1] : p.terms_) {
        for (const auto& [m2, c2] : q.terms_) {
            ring.accumulate(r.terms_, m1 * m2, c1 * c2);
        }
    }
    r.settle();
    return r;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& q) {
    *this = *this * q;
    return *this;
}

SparsePoly& SparsePoly::operator*=(const BigInt& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, k] : terms_) k *= c;
    settle();
    return *this;
}

SparsePoly SparsePoly::pow(unsigned k) const {
    SparsePoly result = constant(ring_, 1);
    SparsePoly base = *this;
    while (k > 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

SparsePoly SparsePoly::filter(const std::function<bool(const Monomial&)>& keep) const {
    SparsePoly r(ring_);
    for (const auto& [m, c] : terms_) {
        if (keep(m)) r.terms_.emplace(m, c);
    }
    r.settle();
    return r;
}

SparsePoly SparsePoly::transport(Ring target, std::span<const int> var_map) const {
    SparsePoly r(std::move(target));
    for (const auto& [m, c] : terms_) {
        Monomial t;
        for (const auto& [v, e] : m.factors()) {
            int w = var_map[static_cast<std::size_t>(v)];
            if (w < 0) throw std::invalid_argument("transport: variable has no image");
            t = t * Monomial::var(w, e);
        }
        r.ring_->accumulate(r.terms_, t, c);
    }
    r.settle();
    return r;
}

SparsePoly SparsePoly::reduce() const {
    SparsePoly r(ring_);
    for (const auto& [m, c] : terms_) ring_->accumulate(r.terms_, m, c);
    r.settle();
    return r;
}

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    std::map<Monomial, BigInt, DisplayOrder> ordered(terms_.begin(), terms_.end());
    bool first = true;
    for (const auto& [m, c] : ordered) {
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_one()) {
            os << a;
        } else {
            if (a != 1) os << a << '*';
            os << ring_->monomial_str(m);
        }
    }
    return os.str();
}

bool SparsePoly::operator==(const SparsePoly& other) const {
    return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

SparsePoly poly_add(const SparsePoly& p, const SparsePoly& q) { return p + q; }

SparsePoly poly_mul(const SparsePoly& p, const SparsePoly& q) { return p * q; }

SparsePoly poly_invert_unit(const SparsePoly& p) {
    const auto& ring = *p.ring();
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [v, e] : m.factors()) {
            if (!ring.is_nilpotent(v)) {
                throw std::domain_error("poly_invert_unit: variable '" + ring.var(static_cast<std::size_t>(v)).name +
                                        "' is not nilpotent");
            }
        }
    }
    BigInt c0 = p.constant_term();
    if (c0 != 1 && c0 != -1) {
        throw std::domain_error("poly_invert_unit: constant term is not a unit");
    }
    // p = c0 (1 - q) with q nilpotent, so p^{-1} = c0 (1 + q + q^2 + ...).
    SparsePoly one = SparsePoly::constant(p.ring(), 1);
    SparsePoly q = one - p * c0;
    SparsePoly sum = one;
    SparsePoly power = one;
    while (true) {
        power *= q;
        if (power.is_zero()) break;
        sum += power;
    }
    return sum * c0;
}

}  // namespace okc
