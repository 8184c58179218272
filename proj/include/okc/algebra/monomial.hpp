#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace okc {

/// A power product of ring variables, stored sparsely as (variable index,
/// exponent) pairs sorted by variable index. Zero exponents are never
/// stored. Exponents are signed so that Laurent variables can carry
/// negative powers; the owning ring decides whether that is legal.
///
/// Monomials are totally ordered by graded lexicographic order: first by
/// total exponent sum, then lexicographically on the dense exponent vector
/// with variable 0 most significant (a larger exponent on an earlier
/// variable makes the monomial larger).
class Monomial {
public:
    using Factor = std::pair<int, int>;  // (variable, exponent)

    Monomial() = default;
    Monomial(std::initializer_list<Factor> factors);

    static Monomial var(int v, int exp = 1);
    static Monomial from_dense(std::span<const int> exps);

    bool is_one() const noexcept { return factors_.empty(); }
    int exponent(int v) const noexcept;
    int total_degree() const noexcept;
    long weighted_degree(std::span<const int> weights) const;
    const std::vector<Factor>& factors() const noexcept { return factors_; }

    /// Dense exponent vector of length n (variables >= n must be absent).
    std::vector<int> dense(std::size_t n) const;

    /// True when every variable of this monomial lies in the given set.
    bool support_within(std::span<const int> vars) const;

    Monomial operator*(const Monomial& other) const;
    Monomial pow(int k) const;
    /// Exponentwise difference; may produce negative exponents.
    Monomial divided_by(const Monomial& other) const;
    /// Drop the given variable entirely.
    Monomial without(int v) const;

    bool operator==(const Monomial&) const = default;
    std::strong_ordering operator<=>(const Monomial& other) const;

private:
    explicit Monomial(std::vector<Factor> f) : factors_(std::move(f)) {}
    std::vector<Factor> factors_;
};

}  // namespace okc

namespace okc {

/// Display order: ascending total degree, and within a degree the
/// lexicographically larger monomial first (so u1 precedes u2).
struct DisplayOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return b < a;
    }
};

}  // namespace okc
