#include "okc/algebra/monomial.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace okc {

Monomial::Monomial(std::initializer_list<Factor> factors) {
    for (const auto& [v, e] : factors) {
        *this = *this * Monomial::var(v, e);
    }
}

Monomial Monomial::var(int v, int exp) {
    if (v < 0) throw std::invalid_argument("Monomial: negative variable index");
    if (exp == 0) return {};
    return Monomial(std::vector<Factor>{{v, exp}});
}

Monomial Monomial::from_dense(std::span<const int> exps) {
    std::vector<Factor> f;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] != 0) f.emplace_back(static_cast<int>(i), exps[i]);
    }
    return Monomial(std::move(f));
}

int Monomial::exponent(int v) const noexcept {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{v, 0},
                               [](const Factor& a, const Factor& b) { return a.first < b.first; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
}

int Monomial::total_degree() const noexcept {
    int d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

long Monomial::weighted_degree(std::span<const int> weights) const {
    long d = 0;
    for (const auto& [v, e] : factors_) {
        d += static_cast<long>(weights[static_cast<std::size_t>(v)]) * e;
    }
    return d;
}

std::vector<int> Monomial::dense(std::size_t n) const {
    std::vector<int> out(n, 0);
    for (const auto& [v, e] : factors_) {
        if (static_cast<std::size_t>(v) >= n) {
            throw std::out_of_range("Monomial::dense: variable outside range");
        }
        out[static_cast<std::size_t>(v)] = e;
    }
    return out;
}

bool Monomial::support_within(std::span<const int> vars) const {
    return std::all_of(factors_.begin(), factors_.end(), [&](const Factor& f) {
        return std::find(vars.begin(), vars.end(), f.first) != vars.end();
    });
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<Factor> out;
    out.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first < b->first) {
            out.push_back(*a++);
        } else if (b->first < a->first) {
            out.push_back(*b++);
        } else {
            if (int e = a->second + b->second; e != 0) out.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    out.insert(out.end(), a, factors_.end());
    out.insert(out.end(), b, other.factors_.end());
    return Monomial(std::move(out));
}

Monomial Monomial::pow(int k) const {
    if (k == 0) return {};
    std::vector<Factor> out = factors_;
    for (auto& f : out) f.second *= k;
    return Monomial(std::move(out));
}

Monomial Monomial::divided_by(const Monomial& other) const {
    return *this * other.pow(-1);
}

Monomial Monomial::without(int v) const {
    std::vector<Factor> out;
    for (const auto& f : factors_) {
        if (f.first != v) out.push_back(f);
    }
    return Monomial(std::move(out));
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    if (auto c = total_degree() <=> other.total_degree(); c != 0) return c;
    // Walk both sparse vectors in variable order; the first variable where
    // exponents differ decides.
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        int va = a != factors_.end() ? a->first : INT32_MAX;
        int vb = b != other.factors_.end() ? b->first : INT32_MAX;
        int v = std::min(va, vb);
        int ea = (va == v) ? a->second : 0;
        int eb = (vb == v) ? b->second : 0;
        if (ea != eb) return ea <=> eb;
        if (va == v) ++a;
        if (vb == v) ++b;
    }
    return std::strong_ordering::equal;
}

}  // namespace okc
