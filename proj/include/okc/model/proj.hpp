#pragma once

#include "okc/algebra/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace okc {

/// P^{d_1} x ... x P^{d_s}.
class MultiProj {
public:
    /// Throws std::invalid_argument for an empty list or a negative d_i.
    explicit MultiProj(std::vector<int> dims);

    const std::vector<int>& dims() const noexcept { return dims_; }
    std::size_t factors() const noexcept { return dims_.size(); }
    int dim() const noexcept { return dim_; }
    int dim(std::size_t i) const { return dims_.at(i); }

    /// "P^2 x P^1"
    std::string str() const;

    bool operator==(const MultiProj&) const = default;

private:
    std::vector<int> dims_;
    int dim_ = 0;
};

/// Z[x_1..x_s]/(x_i^{d_i+1}) with x_i = 1 - [O_i(-1)]. Variables are named
/// "x" for a single factor, else x1..xs.
Ring k_ring(const MultiProj& p);
/// k_ring plus a Laurent variable "beta" of homological degree +1
/// (index s). The x_i carry degree 0.
Ring bm_ring(const MultiProj& p);
/// Z[h_1..h_s]/(h_i^{d_i+1}) graded by codimension.
Ring chow_ring(const MultiProj& p);

/// Element of K_0 of a multiprojective space.
class KClass {
public:
    explicit KClass(MultiProj space);
    /// Throws std::invalid_argument when `value` is not over k_ring(space).
    KClass(MultiProj space, SparsePoly value);

    const MultiProj& space() const noexcept { return space_; }
    const SparsePoly& value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_.is_zero(); }

    /// prod x_i^{c_i}
    static KClass monomial(const MultiProj& p, const std::vector<int>& exps, const BigInt& c = 1);
    static KClass one(const MultiProj& p) { return monomial(p, std::vector<int>(p.factors(), 0)); }

    KClass operator-() const { return KClass(space_, -value_); }
    friend KClass operator+(const KClass& a, const KClass& b);
    friend KClass operator-(const KClass& a, const KClass& b);
    friend KClass operator*(const KClass& a, const KClass& b);
    friend KClass operator*(const BigInt& c, const KClass& a) { return KClass(a.space_, a.value_ * c); }

    std::string str() const { return value_.str(); }
    bool operator==(const KClass& o) const { return space_ == o.space_ && value_ == o.value_; }

private:
    MultiProj space_;
    SparsePoly value_;
};

/// Laurent polynomial in beta with K_0 coefficients; beta^k * kappa sits in
/// homological degree k.
class BMClass {
public:
    explicit BMClass(MultiProj space);
    /// Throws std::invalid_argument when `value` is not over bm_ring(space).
    BMClass(MultiProj space, SparsePoly value);

    static BMClass from_k(const KClass& k, int beta_exp);
    /// beta^d * 1, the fundamental class of the ambient space.
    static BMClass fundamental(const MultiProj& p);

    const MultiProj& space() const noexcept { return space_; }
    const SparsePoly& value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_.is_zero(); }

    /// K-part of each nonzero beta power.
    std::map<int, KClass> beta_terms() const;
    static BMClass from_beta_terms(const MultiProj& p, const std::map<int, KClass>& terms);

    BMClass operator-() const { return BMClass(space_, -value_); }
    friend BMClass operator+(const BMClass& a, const BMClass& b);
    friend BMClass operator-(const BMClass& a, const BMClass& b);
    friend BMClass operator*(const BigInt& c, const BMClass& a) { return BMClass(a.space_, a.value_ * c); }
    /// K_0-module structure.
    friend BMClass operator*(const KClass& k, const BMClass& a);
    /// Multiply by beta^k.
    BMClass shifted(int k) const;

    /// Grouped by descending beta power, e.g. "beta*(2*x - x^2) + x^2".
    std::string str() const;
    bool operator==(const BMClass& o) const { return space_ == o.space_ && value_ == o.value_; }

private:
    MultiProj space_;
    SparsePoly value_;
};

class ChowClass {
public:
    explicit ChowClass(MultiProj space);
    ChowClass(MultiProj space, SparsePoly value);

    static ChowClass monomial(const MultiProj& p, const std::vector<int>& exps, const BigInt& c = 1);
    /// h_i
    static ChowClass hyperplane(const MultiProj& p, std::size_t i);

    const MultiProj& space() const noexcept { return space_; }
    const SparsePoly& value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_.is_zero(); }

    friend ChowClass operator+(const ChowClass& a, const ChowClass& b);
    friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
    friend ChowClass operator*(const BigInt& c, const ChowClass& a) { return ChowClass(a.space_, a.value_ * c); }

    std::string str() const { return value_.str(); }
    bool operator==(const ChowClass& o) const { return space_ == o.space_ && value_ == o.value_; }

private:
    MultiProj space_;
    SparsePoly value_;
};

/// O(a_1, ..., a_s)
struct LineBundleSpec {
    std::vector<long> degrees;
};

/// A K-class together with a level n, required to lie in F_n: the span of
/// the monomials prod x_i^{c_i} with sum (d_i - c_i) <= n.
class ConnectiveClass {
public:
    /// Throws std::domain_error when value is not in F_level.
    ConnectiveClass(int level, KClass value);

    int level() const noexcept { return level_; }
    const KClass& value() const noexcept { return value_; }
    const MultiProj& space() const noexcept { return value_.space(); }

    bool operator==(const ConnectiveClass&) const = default;

private:
    int level_;
    KClass value_;
};

/// P' inside P as a product of linear subspaces of codimensions c_i.
struct LinearEmbedding {
    MultiProj ambient;
    std::vector<int> codims;

    /// Throws std::invalid_argument for codims out of range.
    LinearEmbedding(MultiProj ambient, std::vector<int> codims);
    MultiProj sub() const;
};

/// The projection P_1 x ... x P_s -> prod_{k} P_{factors[k]}.
struct Projection {
    MultiProj source;
    std::vector<std::size_t> factors;

    /// Throws std::invalid_argument for repeated or out-of-range factors.
    Projection(MultiProj source, std::vector<std::size_t> factors);
    MultiProj target() const;
};

/// [O(a)] = prod (1 - x_i)^{-a_i}
KClass class_of_bundle(const MultiProj& p, const LineBundleSpec& l);
/// prod x_i^{c_i}, the structure sheaf of a product of linear subspaces.
KClass class_of_linear_stratum(const MultiProj& p, const std::vector<int>& codims);

/// c~_1(L)(alpha) = beta^{-1} (1 - [L^{-1}]) alpha
BMClass chern_operator(const MultiProj& p, const LineBundleSpec& l, const BMClass& alpha);

/// Dimension of the stratum x^c: sum (d_i - c_i).
int stratum_dimension(const MultiProj& p, const Monomial& m);
/// Least n with kappa in F_n. Throws std::domain_error for zero.
int filtration_level(const KClass& kappa);
/// Monomial basis of F_n, ascending.
std::vector<Monomial> connective_group(const MultiProj& p, int n);
/// The inclusion F_n -> F_{n+1} (multiplication by beta).
ConnectiveClass beta_inclusion(const ConnectiveClass& c);
/// Image in CH_n of a class at level n: top-dimensional monomials x^c
/// become h^c, the rest lie in F_{n-1} and die.
ChowClass gr_map(const ConnectiveClass& c);

KClass pullback_projection(const Projection& f, const KClass& kappa);
KClass pullback_linear(const LinearEmbedding& e, const KClass& kappa);
KClass pushforward_linear(const LinearEmbedding& e, const KClass& kappa);

}  // namespace okc
