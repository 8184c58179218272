#pragma once
// Test-only oracles for the multiplicative law, built from generalized
// binomial expansions rather than from the formal-sum recursion.

#include "okc/fgl/fgl.hpp"

#include <vector>

namespace okc::oracle {

/// binom(n, k) for any integer n and k >= 0.
inline BigInt gen_binom(long n, long k) {
    BigInt num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= BigInt(n - i);
        den *= BigInt(i + 1);
    }
    return num / den;
}

/// (1 - beta*u_i)^n truncated, as a series in `names` at index i.
inline TruncSeries one_minus_beta_u_pow(const Ring& zb, const std::vector<std::string>& names, int trunc, int i, long n) {
    TruncSeries s(zb, names, trunc);
    auto beta = SparsePoly::variable(zb, "beta");
    for (long k = 0; k <= trunc; ++k) {
        // binom(n,k) * (-beta)^k * u^k
        SparsePoly c = SparsePoly::constant(zb, gen_binom(n, k)) * (-beta).pow(static_cast<unsigned>(k));
        s.add_term(Monomial::var(i, static_cast<int>(k)), c);
    }
    return s;
}

/// [n]u = beta^{-1} (1 - (1 - beta u)^n) for the multiplicative law.
inline TruncSeries mult_n_series_closed(int n, int trunc) {
    Ring zb = beta_coefficient_ring();
    auto names = series_names(1);
    auto beta = SparsePoly::variable(zb, "beta");
    TruncSeries s(zb, names, trunc);
    for (long k = 1; k <= trunc; ++k) {
        // -binom(n,k) (-beta)^k / beta = binom(n,k) (-1)^{k+1} beta^{k-1}
        BigInt c = gen_binom(n, k) * ((k % 2 == 1) ? 1 : -1);
        s.add_term(Monomial::var(0, static_cast<int>(k)), SparsePoly::constant(zb, c) * beta.pow(static_cast<unsigned>(k - 1)));
    }
    return s;
}

/// prod_i (1 - beta u_i)^{n_i}, which equals 1 - beta * F_{n_1..n_r}.
inline TruncSeries mult_multi_sum_product(const std::vector<int>& ns, int trunc) {
    Ring zb = beta_coefficient_ring();
    auto names = series_names(ns.size());
    TruncSeries p = TruncSeries::constant(zb, names, trunc, SparsePoly::constant(zb, 1));
    for (std::size_t i = 0; i < ns.size(); ++i) p = p * one_minus_beta_u_pow(zb, names, trunc, static_cast<int>(i), ns[i]);
    return p;
}

}  // namespace okc::oracle
