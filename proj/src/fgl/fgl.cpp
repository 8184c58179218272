#include "okc/fgl/fgl.hpp"

#include <sstream>
#include <stdexcept>

namespace okc {

FormalGroupLaw::FormalGroupLaw(Ring ring, int trunc, Table coeffs) : ring_(std::move(ring)), trunc_(trunc) {
    if (trunc_ < 1) throw std::invalid_argument("FormalGroupLaw: truncation must be >= 1");
    for (const auto& [ij, c] : coeffs) {
        const auto [i, j] = ij;
        if (i < 1 || j < 1) throw std::invalid_argument("FormalGroupLaw: coefficient indices must be >= 1");
        if (i + j > trunc_ + 1) throw std::invalid_argument("FormalGroupLaw: coefficient beyond truncation");
        if (!same_ring(c.ring(), ring_)) throw std::invalid_argument("FormalGroupLaw: coefficient in wrong ring");
        auto mirror = coeffs.find({j, i});
        SparsePoly other = mirror == coeffs.end() ? SparsePoly(ring_) : mirror->second;
        if (!(other == c)) {
            std::ostringstream os;
            os << "FormalGroupLaw: not commutative (a_" << i << j << " != a_" << j << i << ")";
            throw std::invalid_argument(os.str());
        }
        if (!c.is_zero()) coeffs_.emplace(ij, c);
    }
}

FormalGroupLaw FormalGroupLaw::from_upper(Ring ring, int trunc, const Table& upper) {
    Table full;
    for (const auto& [ij, c] : upper) {
        if (ij.first > ij.second) throw std::invalid_argument("from_upper: entry below the diagonal");
        full.insert_or_assign(ij, c);
        full.insert_or_assign({ij.second, ij.first}, c);
    }
    return FormalGroupLaw(std::move(ring), trunc, std::move(full));
}

SparsePoly FormalGroupLaw::coefficient(int i, int j) const {
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? SparsePoly(ring_) : it->second;
}

Ring beta_coefficient_ring() {
    return make_ring({{"beta", -1, std::nullopt, false}});
}

FormalGroupLaw fgl_multiplicative(int trunc) {
    Ring r = beta_coefficient_ring();
    return FormalGroupLaw::from_upper(r, trunc, {{{1, 1}, -SparsePoly::variable(r, "beta")}});
}

FormalGroupLaw fgl_additive(int trunc) {
    return FormalGroupLaw(integer_ring(), trunc, {});
}

TruncSeries formal_sum(const FormalGroupLaw& f, const TruncSeries& s, const TruncSeries& t) {
    if (!same_ring(s.coeff_ring(), f.ring())) throw std::invalid_argument("formal_sum: series not over the law's ring");
    if (!s.has_zero_constant() || !t.has_zero_constant()) {
        throw std::invalid_argument("formal_sum: series with nonzero constant term cannot be substituted");
    }
    const int trunc = s.trunc();
    if (trunc > f.trunc() + 1) throw std::invalid_argument("formal_sum: series truncation exceeds the law's table");

    TruncSeries result = s + t;
    // s^i has u-order >= i, so only i + j <= trunc can contribute.
    std::vector<TruncSeries> s_pow{TruncSeries::constant(s.coeff_ring(), s.names(), trunc, SparsePoly::constant(f.ring(), 1))};
    std::vector<TruncSeries> t_pow = s_pow;
    for (const auto& [ij, a] : f.coefficients()) {
        const auto [i, j] = ij;
        if (i + j > trunc) continue;
        while (static_cast<int>(s_pow.size()) <= i) s_pow.push_back(s_pow.back() * s);
        while (static_cast<int>(t_pow.size()) <= j) t_pow.push_back(t_pow.back() * t);
        result += (s_pow[static_cast<std::size_t>(i)] * t_pow[static_cast<std::size_t>(j)]).scaled(a);
    }
    return result;
}

TruncSeries formal_inverse(const FormalGroupLaw& f) {
    const auto names = series_names(1);
    const int n = f.trunc();
    TruncSeries u = TruncSeries::variable(f.ring(), names, n, 0);
    TruncSeries inv = -u;
    for (int k = 2; k <= n; ++k) {
        // d/dv F(u, v) = 1 + O(u), so the degree-k defect is removed by
        // subtracting it from iota without disturbing lower degrees.
        SparsePoly c = formal_sum(f, u, inv).coeff(Monomial::var(0, k));
        if (c.is_zero()) continue;
        TruncSeries fix(f.ring(), names, n);
        fix.add_term(Monomial::var(0, k), c);
        inv -= fix;
    }
    return inv;
}

TruncSeries n_series(const FormalGroupLaw& f, int n) {
    const auto names = series_names(1);
    TruncSeries u = TruncSeries::variable(f.ring(), names, f.trunc(), 0);
    if (n == 0) return TruncSeries(f.ring(), names, f.trunc());
    TruncSeries step = n > 0 ? u : formal_inverse(f);
    TruncSeries acc = step;
    for (int k = 1; k < (n > 0 ? n : -n); ++k) acc = formal_sum(f, acc, step);
    return acc;
}

TruncSeries multi_sum(const FormalGroupLaw& f, const std::vector<int>& multiplicities) {
    if (multiplicities.empty()) throw std::invalid_argument("multi_sum: need at least one variable");
    const auto names = series_names(multiplicities.size());
    std::optional<TruncSeries> acc;
    for (std::size_t i = 0; i < multiplicities.size(); ++i) {
        TruncSeries term = n_series(f, multiplicities[i]).relabel(names, {static_cast<int>(i)});
        acc = acc ? formal_sum(f, *acc, term) : term;
    }
    return *acc;
}

TruncSeries SupportDecomposition::reconstruct(const Ring& ring, const std::vector<std::string>& names, int trunc) const {
    TruncSeries total(ring, names, trunc);
    for (const auto& [idx, g] : parts) {
        TruncSeries ui = TruncSeries::constant(ring, names, trunc, SparsePoly::constant(ring, 1));
        for (int v : idx) ui = ui * TruncSeries::variable(ring, names, trunc, static_cast<std::size_t>(v));
        total += g * ui;
    }
    return total;
}

SupportDecomposition support_decompose(const TruncSeries& s) {
    SupportDecomposition out;
    for (const auto& [m, c] : s.terms()) {
        if (m.is_one()) throw std::invalid_argument("support_decompose: nonzero constant term");
        IndexSet support;
        Monomial u_i;
        for (const auto& [v, e] : m.factors()) {
            support.push_back(v);
            u_i = u_i * Monomial::var(v);
        }
        auto it = out.parts.try_emplace(support, s.coeff_ring(), s.names(), s.trunc()).first;
        it->second.add_term(m.divided_by(u_i), c);
    }
    return out;
}

AssociativityReport verify_associativity(const FormalGroupLaw& f) {
    const std::vector<std::string> names{"u", "v", "w"};
    const int trunc = f.trunc() + 1;
    auto var = [&](std::size_t i) { return TruncSeries::variable(f.ring(), names, trunc, i); };
    TruncSeries u = var(0), v = var(1), w = var(2);
    TruncSeries diff = formal_sum(f, formal_sum(f, u, v), w) - formal_sum(f, u, formal_sum(f, v, w));
    AssociativityReport rep;
    for (const auto& [m, c] : diff.terms()) rep.defects.emplace_back(m, c);
    return rep;
}

std::string index_set_str(const IndexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i] + 1);
    }
    return out + "}";
}

}  // namespace okc
